// Copyright 2026 The telecut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "telecut/noise/depolarizing.hpp"
#include "telecut/qsim/circuit.hpp"

namespace telecut::noise {

/// Depolarizing gate errors attached after local gates.
struct LocalNoise {
  DepolarizingSpec one_qubit{1, 1.0};
  DepolarizingSpec two_qubit{2, 1.0};
  FidelityConvention convention = FidelityConvention::kAverageGate;

  /// Perfect local gates.
  static LocalNoise ideal();
  /// 1-qubit F = 0.99, 2-qubit F = 0.98, average gate fidelity.
  static LocalNoise standard();

  void validate() const;
  bool is_ideal() const;

  /// Channel to insert after a gate on `targets`; empty when that gate size
  /// is noiseless.
  std::optional<KrausChannel> after(std::vector<int> targets) const;

  /// Appends `gate` to `circuit`, followed by its error channel.
  void append_noisy(Circuit& circuit, GateOp gate) const;
};

/// Which operations pay local gate errors.
///
/// kPhysical charges the operations a device executes as pulses: data and
/// communication qubit CNOTs, basis-change Hadamards and the gates of the
/// circuit being distributed. Pauli frame corrections, measurement
/// feedforward and the ancilla apparatus that estimates cut-term overlaps are
/// treated as classical bookkeeping and stay ideal.
///
/// kEveryGate charges every non-identity gate that appears in the simulated
/// circuits, including the deferred-measurement controls, the Bell
/// preparation gates and the controlled-Pauli and ancilla gates of cut
/// subexperiments.
enum class NoiseProfile { kPhysical, kEveryGate };

NoiseProfile parse_noise_profile(std::string_view text);
std::string_view to_string(NoiseProfile profile);

}  // namespace telecut::noise

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

#include <vector>

#include "telecut/noise/local_noise.hpp"
#include "telecut/noise/transducer.hpp"
#include "telecut/qsim/circuit.hpp"
#include "telecut/qsim/outcome.hpp"

namespace telecut::telegate {

/// Data and communication qubit assignment for a star of modules: one
/// central data qubit and one data qubit per peripheral module. The two
/// communication qubits are reused for every remote gate.
struct ModuleLayout {
  int central = 0;
  std::vector<int> peripherals;
  int control_comm = 0;
  int target_comm = 0;

  /// Data qubits 0..n-1 (0 is central), communication qubits n and n+1.
  static ModuleLayout for_ghz(int ghz_size);

  void validate() const;
  int data_qubits() const { return 1 + static_cast<int>(peripherals.size()); }
};

struct RemoteGateSpec {
  int control = 0;       // q1
  int target = 1;        // q2
  int control_comm = 2;  // q1c
  int target_comm = 3;   // q2c
  noise::NoisyBellState bell = noise::ideal_bell_state();
  noise::LocalNoise local = noise::LocalNoise::ideal();
  noise::NoiseProfile profile = noise::NoiseProfile::kPhysical;

  void validate(int n_qubits) const;
};

/// H and CNOT on the communication pair with the link's replacement channel
/// attached to the CNOT, then X on the control-side communication qubit.
/// From |00> the pair ends in the heralded state sigma.
Circuit noisy_bell_prep(const RemoteGateSpec& spec, int n_qubits);

/// Full remote CNOT on a register of `n_qubits`, ending with the
/// communication qubits traced out.
Circuit telegate_circuit(const RemoteGateSpec& spec, int n_qubits);

/// Applies the remote CNOT. The communication qubits must be in |00> on
/// entry (std::invalid_argument otherwise); they are traced out on exit, so
/// the result has two fewer qubits with the others in their original order.
DensityMatrix remote_cnot(DensityMatrix state, const RemoteGateSpec& spec);

struct RemoteGhzResult {
  OutcomeDistribution distribution;
  DensityMatrix state;
  int peak_register_qubits = 0;
};

/// GHZ-n over n modules: H on the central qubit, then one remote CNOT per
/// peripheral with the communication pair re-prepared before each gate.
RemoteGhzResult simulate_ghz_remote(int ghz_size, const noise::TransducerParams& params,
                                    const noise::LocalNoise& local,
                                    noise::NoiseProfile profile = noise::NoiseProfile::kPhysical);

OutcomeDistribution build_ghz_remote(int ghz_size, const noise::TransducerParams& params,
                                     const noise::LocalNoise& local,
                                     noise::NoiseProfile profile = noise::NoiseProfile::kPhysical);

inline constexpr int kMinGhzSize = 2;
inline constexpr int kMaxGhzSize = 6;

}  // namespace telecut::telegate

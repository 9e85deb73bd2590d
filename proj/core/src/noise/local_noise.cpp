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

#include "telecut/noise/local_noise.hpp"

#include <stdexcept>
#include <string>

namespace telecut::noise {

LocalNoise LocalNoise::ideal() { return LocalNoise{}; }

LocalNoise LocalNoise::standard() {
  LocalNoise n;
  n.one_qubit.gate_fidelity = 0.99;
  n.two_qubit.gate_fidelity = 0.98;
  return n;
}

void LocalNoise::validate() const {
  one_qubit.validate();
  two_qubit.validate();
  if (one_qubit.n_qubits != 1 || two_qubit.n_qubits != 2) {
    throw std::invalid_argument("local noise specs must cover 1 and 2 qubit gates");
  }
  pauli_error_probability(one_qubit, convention);
  pauli_error_probability(two_qubit, convention);
}

bool LocalNoise::is_ideal() const {
  return one_qubit.gate_fidelity == 1.0 && two_qubit.gate_fidelity == 1.0;
}

std::optional<KrausChannel> LocalNoise::after(std::vector<int> targets) const {
  const DepolarizingSpec* spec = nullptr;
  if (targets.size() == 1) {
    spec = &one_qubit;
  } else if (targets.size() == 2) {
    spec = &two_qubit;
  } else {
    throw std::invalid_argument("local noise defined for 1 and 2 qubit gates only");
  }
  if (spec->gate_fidelity == 1.0) {
    return std::nullopt;
  }
  return depolarizing_channel(*spec, std::move(targets), convention);
}

void LocalNoise::append_noisy(Circuit& circuit, GateOp gate) const {
  auto channel = after(gate.targets);
  circuit.add(std::move(gate));
  if (channel) {
    circuit.add(std::move(*channel));
  }
}

NoiseProfile parse_noise_profile(std::string_view text) {
  if (text == "physical") return NoiseProfile::kPhysical;
  if (text == "every-gate") return NoiseProfile::kEveryGate;
  throw std::invalid_argument("unknown noise profile '" + std::string(text) +
                              "' (expected physical|every-gate)");
}

std::string_view to_string(NoiseProfile profile) {
  return profile == NoiseProfile::kPhysical ? "physical" : "every-gate";
}

}  // namespace telecut::noise

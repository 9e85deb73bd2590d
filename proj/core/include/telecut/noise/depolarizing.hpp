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

#include <string_view>
#include <vector>

#include "telecut/qsim/kraus.hpp"

namespace telecut::noise {

/// How a quoted gate fidelity maps onto the depolarizing strength.
enum class FidelityConvention {
  kAverageGate,  // configured F is the average gate fidelity
  kProcess,      // configured F is the process (entanglement) fidelity
};

FidelityConvention parse_fidelity_convention(std::string_view text);
std::string_view to_string(FidelityConvention convention);

struct DepolarizingSpec {
  int n_qubits = 1;
  double gate_fidelity = 1.0;

  void validate() const;
};

/// Total probability p of a non-identity Pauli error in the channel
///   rho -> (1 - p) rho + p / (4^k - 1) * sum_{P != I} P rho P.
/// Average gate fidelity: p = (1 - F)(d + 1)/d. Process fidelity: p = 1 - F.
double pauli_error_probability(const DepolarizingSpec& spec,
                               FidelityConvention convention = FidelityConvention::kAverageGate);

/// Kraus set {sqrt(1-p) I} U {sqrt(p/(4^k-1)) P}, P ranging over the
/// non-identity k-qubit Paulis in lexicographic (I, X, Y, Z) order.
KrausChannel depolarizing_channel(const DepolarizingSpec& spec, std::vector<int> targets,
                                  FidelityConvention convention = FidelityConvention::kAverageGate);

/// All 4^k Pauli strings on k qubits, identity first.
std::vector<Matrix> pauli_basis(int n_qubits);

}  // namespace telecut::noise

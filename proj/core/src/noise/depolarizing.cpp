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

#include "telecut/noise/depolarizing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "telecut/qsim/gate.hpp"

namespace telecut::noise {

FidelityConvention parse_fidelity_convention(std::string_view text) {
  if (text == "average") return FidelityConvention::kAverageGate;
  if (text == "process") return FidelityConvention::kProcess;
  throw std::invalid_argument("unknown fidelity convention '" + std::string(text) +
                              "' (expected average|process)");
}

std::string_view to_string(FidelityConvention convention) {
  return convention == FidelityConvention::kAverageGate ? "average" : "process";
}

void DepolarizingSpec::validate() const {
  if (n_qubits != 1 && n_qubits != 2) {
    throw std::invalid_argument("depolarizing channel supports 1 or 2 qubits, got " +
                                std::to_string(n_qubits));
  }
  if (!(gate_fidelity > 0.0 && gate_fidelity <= 1.0)) {
    throw std::invalid_argument("gate fidelity must lie in (0, 1], got " +
                                std::to_string(gate_fidelity));
  }
}

double pauli_error_probability(const DepolarizingSpec& spec, FidelityConvention convention) {
  spec.validate();
  const double d = std::ldexp(1.0, spec.n_qubits);
  const double infidelity = 1.0 - spec.gate_fidelity;
  const double p =
      convention == FidelityConvention::kAverageGate ? infidelity * (d + 1.0) / d : infidelity;
  if (p > 1.0) {
    throw std::invalid_argument("gate fidelity " + std::to_string(spec.gate_fidelity) +
                                " is below what a depolarizing channel can reach");
  }
  return p;
}

std::vector<Matrix> pauli_basis(int n_qubits) {
  const Matrix single[4] = {gates::identity(1), gates::x(), gates::y(), gates::z()};
  std::vector<Matrix> out = {Matrix::Identity(1, 1)};
  for (int q = 0; q < n_qubits; ++q) {
    std::vector<Matrix> next;
    next.reserve(out.size() * 4);
    for (const Matrix& prefix : out) {
      for (const Matrix& p : single) {
        next.push_back(gates::kron(prefix, p));
      }
    }
    out = std::move(next);
  }
  return out;
}

KrausChannel depolarizing_channel(const DepolarizingSpec& spec, std::vector<int> targets,
                                  FidelityConvention convention) {
  const double p = pauli_error_probability(spec, convention);
  if (static_cast<int>(targets.size()) != spec.n_qubits) {
    throw std::invalid_argument("depolarizing target count does not match spec");
  }
  std::vector<Matrix> paulis = pauli_basis(spec.n_qubits);
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(1.0 - p) * paulis.front());
  if (p > 0.0) {
    const double w = std::sqrt(p / static_cast<double>(paulis.size() - 1));
    for (std::size_t i = 1; i < paulis.size(); ++i) {
      ops.push_back(w * paulis[i]);
    }
  }
  return KrausChannel::make(std::move(ops), std::move(targets),
                            "depolarizing" + std::to_string(spec.n_qubits) + "q");
}

}  // namespace telecut::noise

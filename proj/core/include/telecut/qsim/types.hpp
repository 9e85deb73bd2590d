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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace telecut {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest register the dense engine accepts.
inline constexpr int kMaxQubits = 10;

/// Qubit 0 is the most significant bit of a basis index. For an n-qubit
/// register, qubit q sits at bit position n - 1 - q.
inline constexpr std::size_t qubit_bit(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

inline constexpr std::size_t register_dim(int n_qubits) {
  return std::size_t{1} << n_qubits;
}

}  // namespace telecut

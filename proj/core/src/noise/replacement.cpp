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

#include "telecut/noise/replacement.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace telecut::noise {

KrausChannel replacement_channel(const DensityMatrix& target, std::vector<int> qubits) {
  target.check();
  if (static_cast<int>(qubits.size()) != target.n_qubits()) {
    throw std::invalid_argument("replacement channel qubit count does not match target state");
  }
  const Matrix herm = 0.5 * (target.matrix() + target.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  const Eigen::Index d = herm.rows();
  std::vector<Matrix> ops;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda <= kReplacementEigenCutoff) {
      continue;
    }
    const Vector psi = std::sqrt(lambda) * solver.eigenvectors().col(i);
    for (Eigen::Index j = 0; j < d; ++j) {
      Matrix k = Matrix::Zero(d, d);
      k.col(j) = psi;
      ops.push_back(std::move(k));
    }
  }
  return KrausChannel::make(std::move(ops), std::move(qubits), "replacement");
}

}  // namespace telecut::noise

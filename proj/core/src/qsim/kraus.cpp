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

#include "telecut/qsim/kraus.hpp"

#include <stdexcept>

#include "telecut/qsim/kernels.hpp"

namespace telecut {

KrausChannel KrausChannel::make(std::vector<Matrix> operators, std::vector<int> targets,
                                std::string name) {
  if (operators.empty()) {
    throw std::invalid_argument("Kraus channel " + name + " has no operators");
  }
  const auto expected = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
  if (targets.empty()) {
    throw std::invalid_argument("Kraus channel " + name + " has no targets");
  }
  for (const Matrix& k : operators) {
    if (k.rows() != expected || k.cols() != expected) {
      throw std::invalid_argument("Kraus operator shape does not match target count");
    }
  }
  for (std::size_t a = 0; a < targets.size(); ++a) {
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      if (targets[a] == targets[b]) {
        throw std::invalid_argument("duplicate channel target " + std::to_string(targets[a]));
      }
    }
  }
  KrausChannel channel{std::move(operators), std::move(targets), std::move(name)};
  const double residual = channel.completeness_residual();
  if (residual > kKrausRejectTolerance) {
    throw std::invalid_argument("Kraus channel " + channel.name +
                                " violates completeness (residual " + std::to_string(residual) +
                                ")");
  }
  return channel;
}

double KrausChannel::completeness_residual() const {
  const Eigen::Index d = operators.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : operators) {
    sum += k.adjoint() * k;
  }
  return (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

KrausChannel KrausChannel::retargeted(std::vector<int> new_targets) const {
  if (new_targets.size() != targets.size()) {
    throw std::invalid_argument("retargeting must keep the qubit count");
  }
  return KrausChannel{operators, std::move(new_targets), name};
}

DensityMatrix apply_kraus(DensityMatrix state, const KrausChannel& channel) {
  Matrix m = state.matrix();
  kernels::apply_operator_sum(m, channel.operators, channel.targets, state.n_qubits());
  return unchecked_state(state.n_qubits(), std::move(m));
}

}  // namespace telecut

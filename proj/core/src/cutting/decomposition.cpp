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

#include "telecut/cutting/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "telecut/qsim/gate.hpp"

namespace telecut::cutting {

PauliCutDecomposition::PauliCutDecomposition(std::vector<CutTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("cut decomposition needs at least one term");
  }
  for (const CutTerm& t : terms_) {
    if (t.control_op.rows() != 2 || t.control_op.cols() != 2 || t.target_op.rows() != 2 ||
        t.target_op.cols() != 2) {
      throw std::invalid_argument("cut terms must be single-qubit operators");
    }
    if (t.coefficient == 0.0) {
      throw std::invalid_argument("cut term " + t.label + " has zero coefficient");
    }
  }
}

Matrix PauliCutDecomposition::reassemble() const {
  Matrix sum = Matrix::Zero(4, 4);
  for (const CutTerm& t : terms_) {
    sum += t.coefficient * gates::kron(t.control_op, t.target_op);
  }
  return sum;
}

double PauliCutDecomposition::l1_norm() const {
  double s = 0.0;
  for (const CutTerm& t : terms_) {
    s += std::abs(t.coefficient);
  }
  return s;
}

double PauliCutDecomposition::l2_norm_squared() const {
  double s = 0.0;
  for (const CutTerm& t : terms_) {
    s += t.coefficient * t.coefficient;
  }
  return s;
}

double PauliCutDecomposition::sampling_cost() const {
  const double l1 = l1_norm();
  return 2.0 * l1 * l1 - l2_norm_squared();
}

PauliCutDecomposition cnot_decomposition() {
  const Matrix i = gates::identity(1);
  const Matrix x = gates::x();
  const Matrix z = gates::z();
  return PauliCutDecomposition({
      {0.5, i, i, "II"},
      {0.5, i, x, "IX"},
      {0.5, z, i, "ZI"},
      {0.5, -z, x, "-ZX"},
  });
}

}  // namespace telecut::cutting

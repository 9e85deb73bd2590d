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

#include <string>
#include <vector>

#include "telecut/qsim/types.hpp"

namespace telecut::cutting {

/// One local term alpha * (control_op (x) target_op) of a cut gate.
struct CutTerm {
  double coefficient = 0.0;
  Matrix control_op;
  Matrix target_op;
  std::string label;
};

class PauliCutDecomposition {
 public:
  explicit PauliCutDecomposition(std::vector<CutTerm> terms);

  const std::vector<CutTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const CutTerm& operator[](std::size_t i) const { return terms_[i]; }

  /// sum_i alpha_i (A_i (x) B_i), control qubit most significant.
  Matrix reassemble() const;
  double l1_norm() const;
  double l2_norm_squared() const;
  /// q = 2 ||alpha||_1^2 - ||alpha||_2^2
  double sampling_cost() const;

 private:
  std::vector<CutTerm> terms_;
};

/// CNOT = 1/2 (I(x)I + I(x)X + Z(x)I + (-Z)(x)X).
PauliCutDecomposition cnot_decomposition();

}  // namespace telecut::cutting

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

#include "telecut/qsim/density_matrix.hpp"
#include "telecut/qsim/types.hpp"

namespace telecut {

/// A unitary acting on an ordered list of distinct qubits.
struct GateOp {
  Matrix unitary;
  std::vector<int> targets;
  std::string name;

  /// Validates unitarity (1e-10) and the dimension/target match.
  static GateOp make(Matrix unitary, std::vector<int> targets, std::string name = {});

  GateOp adjoint() const;
  /// True when the unitary equals the identity exactly.
  bool is_identity() const;
};

DensityMatrix apply_gate(DensityMatrix state, const GateOp& gate);

namespace gates {

Matrix identity(int n_qubits = 1);
Matrix h();
Matrix x();
Matrix y();
Matrix z();
Matrix s();
Matrix s_dagger();
Matrix cnot();
Matrix cz();
/// |0><0| (x) when_zero + |1><1| (x) when_one, control is the first qubit.
Matrix controlled_pair(const Matrix& when_zero, const Matrix& when_one);
/// Kronecker product with `first` acting on the more significant qubit.
Matrix kron(const Matrix& first, const Matrix& second);

GateOp H(int q);
GateOp X(int q);
GateOp Z(int q);
GateOp S(int q);
GateOp Sdg(int q);
GateOp CNOT(int control, int target);
GateOp CZ(int control, int target);

}  // namespace gates
}  // namespace telecut

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

#include "telecut/qsim/gate.hpp"

#include <cmath>
#include <stdexcept>

#include "telecut/qsim/kernels.hpp"

namespace telecut {

GateOp GateOp::make(Matrix unitary, std::vector<int> targets, std::string name) {
  if (unitary.rows() != unitary.cols()) {
    throw std::invalid_argument("gate matrix must be square");
  }
  const auto expected = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
  if (targets.empty() || unitary.rows() != expected) {
    throw std::invalid_argument("gate dimension " + std::to_string(unitary.rows()) +
                                " does not match " + std::to_string(targets.size()) +
                                " target qubit(s)");
  }
  for (std::size_t a = 0; a < targets.size(); ++a) {
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      if (targets[a] == targets[b]) {
        throw std::invalid_argument("duplicate gate target " + std::to_string(targets[a]));
      }
    }
  }
  const Matrix residual = unitary * unitary.adjoint() - Matrix::Identity(expected, expected);
  if (residual.cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("gate " + name + " is not unitary");
  }
  return GateOp{std::move(unitary), std::move(targets), std::move(name)};
}

GateOp GateOp::adjoint() const {
  return GateOp{unitary.adjoint(), targets, name.empty() ? name : name + "^dg"};
}

bool GateOp::is_identity() const {
  return unitary == Matrix::Identity(unitary.rows(), unitary.cols());
}

DensityMatrix apply_gate(DensityMatrix state, const GateOp& gate) {
  Matrix m = state.matrix();
  kernels::apply_sandwich(m, gate.unitary, gate.unitary, gate.targets, state.n_qubits());
  return unchecked_state(state.n_qubits(), std::move(m));
}

namespace gates {

Matrix identity(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(register_dim(n_qubits));
  return Matrix::Identity(d, d);
}

Matrix h() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m << r, r, r, -r;
  return m;
}

Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix s() {
  Matrix m(2, 2);
  m << 1, 0, 0, Complex(0, 1);
  return m;
}

Matrix s_dagger() {
  Matrix m(2, 2);
  m << 1, 0, 0, Complex(0, -1);
  return m;
}

Matrix controlled_pair(const Matrix& when_zero, const Matrix& when_one) {
  if (when_zero.rows() != when_one.rows() || when_zero.cols() != when_one.cols()) {
    throw std::invalid_argument("controlled branches must have equal shape");
  }
  const Eigen::Index d = when_zero.rows();
  Matrix m = Matrix::Zero(2 * d, 2 * d);
  m.topLeftCorner(d, d) = when_zero;
  m.bottomRightCorner(d, d) = when_one;
  return m;
}

Matrix cnot() { return controlled_pair(identity(1), x()); }

Matrix cz() { return controlled_pair(identity(1), z()); }

Matrix kron(const Matrix& first, const Matrix& second) {
  Matrix out(first.rows() * second.rows(), first.cols() * second.cols());
  for (Eigen::Index i = 0; i < first.rows(); ++i) {
    for (Eigen::Index j = 0; j < first.cols(); ++j) {
      out.block(i * second.rows(), j * second.cols(), second.rows(), second.cols()) =
          first(i, j) * second;
    }
  }
  return out;
}

GateOp H(int q) { return GateOp{h(), {q}, "h"}; }
GateOp X(int q) { return GateOp{x(), {q}, "x"}; }
GateOp Z(int q) { return GateOp{z(), {q}, "z"}; }
GateOp S(int q) { return GateOp{s(), {q}, "s"}; }
GateOp Sdg(int q) { return GateOp{s_dagger(), {q}, "sdg"}; }
GateOp CNOT(int control, int target) { return GateOp::make(cnot(), {control, target}, "cx"); }
GateOp CZ(int control, int target) { return GateOp::make(cz(), {control, target}, "cz"); }

}  // namespace gates
}  // namespace telecut

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

#include "telecut/qsim/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "telecut/qsim/kernels.hpp"

namespace telecut {
namespace {

int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) {
    ++n;
  }
  if ((Eigen::Index{1} << n) != dim || n == 0) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  if (n > kMaxQubits) {
    throw std::invalid_argument("register of " + std::to_string(n) + " qubits exceeds limit");
  }
  return n;
}

}  // namespace

DensityMatrix unchecked_state(int n_qubits, Matrix data) {
  return DensityMatrix(n_qubits, std::move(data));
}

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("register size must lie in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n_qubits));
  }
  const auto dim = static_cast<Eigen::Index>(register_dim(n_qubits));
  Matrix m = Matrix::Zero(dim, dim);
  m(0, 0) = 1.0;
  return DensityMatrix(n_qubits, std::move(m));
}

DensityMatrix DensityMatrix::from_pure_state(const Vector& psi) {
  const int n = qubits_for_dim(psi.size());
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("pure state is not normalized");
  }
  return DensityMatrix(n, psi * psi.adjoint());
}

DensityMatrix DensityMatrix::from_matrix(Matrix data, const StateTolerances& tol) {
  if (data.rows() != data.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  const int n = qubits_for_dim(data.rows());
  DensityMatrix state(n, std::move(data));
  state.check(tol);
  return state;
}

double DensityMatrix::hermiticity_residual() const {
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (data_ + data_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::check(const StateTolerances& tol) const {
  const double herm = hermiticity_residual();
  if (herm > tol.hermiticity) {
    throw std::domain_error("density matrix not Hermitian (residual " + std::to_string(herm) +
                            ")");
  }
  const Complex tr = trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw std::domain_error("density matrix trace is " + std::to_string(tr.real()) + " + " +
                            std::to_string(tr.imag()) + "i");
  }
  const double lmin = min_eigenvalue();
  if (lmin < tol.min_eigenvalue) {
    throw std::domain_error("density matrix has eigenvalue " + std::to_string(lmin));
  }
}

double DensityMatrix::overlap(const Vector& psi) const {
  if (psi.size() != data_.rows()) {
    throw std::invalid_argument("overlap vector dimension mismatch");
  }
  return (psi.adjoint() * data_ * psi)(0, 0).real();
}

DensityMatrix tensor(const DensityMatrix& first, const DensityMatrix& second) {
  const Matrix& a = first.matrix();
  const Matrix& b = second.matrix();
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return unchecked_state(first.n_qubits() + second.n_qubits(), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& state, std::span<const int> keep) {
  Matrix reduced = kernels::partial_trace(state.matrix(), keep, state.n_qubits());
  return unchecked_state(static_cast<int>(keep.size()), std::move(reduced));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shapes differ");
  }
  if (a.size() == 0) {
    return 0.0;
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace telecut

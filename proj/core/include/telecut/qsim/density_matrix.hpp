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

#include <span>

#include "telecut/qsim/types.hpp"

namespace telecut {

struct StateTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-9;
};

/// A mixed state of an n-qubit register. Construction validates the density
/// matrix invariants; the operations in this header return new values.
class DensityMatrix {
 public:
  /// |0...0><0...0| on n qubits.
  static DensityMatrix zero_state(int n_qubits);
  static DensityMatrix from_pure_state(const Vector& psi);
  /// Validates Hermiticity, unit trace and positivity against `tol`.
  static DensityMatrix from_matrix(Matrix data, const StateTolerances& tol = {});

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return data_.rows(); }
  const Matrix& matrix() const { return data_; }

  Complex trace() const { return data_.trace(); }
  /// max |rho - rho^dagger| elementwise.
  double hermiticity_residual() const;
  double min_eigenvalue() const;
  /// Throws std::domain_error when an invariant is violated.
  void check(const StateTolerances& tol = {}) const;

  /// <psi|rho|psi>
  double overlap(const Vector& psi) const;

 private:
  DensityMatrix(int n_qubits, Matrix data) : n_qubits_(n_qubits), data_(std::move(data)) {}

  friend DensityMatrix unchecked_state(int n_qubits, Matrix data);

  int n_qubits_;
  Matrix data_;
};

/// Wraps a matrix produced by a trusted operation without re-running the
/// eigenvalue check. Used by the engine after CPTP updates.
DensityMatrix unchecked_state(int n_qubits, Matrix data);

DensityMatrix tensor(const DensityMatrix& first, const DensityMatrix& second);

/// Reduced state on `keep`; the result's qubit order follows `keep`.
DensityMatrix partial_trace(const DensityMatrix& state, std::span<const int> keep);

/// Maximum elementwise distance between two matrices.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace telecut

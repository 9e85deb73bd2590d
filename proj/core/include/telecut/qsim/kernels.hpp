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

namespace telecut::kernels {

// Low-level operator kernels on raw 2^n x 2^n matrices. They accept any
// matrix, physical or not, which lets the cutting oracle push signed
// operator sandwiches through the same code as ordinary states.
//
// `op` is a 2^k x 2^k matrix acting on `targets` (k entries, first target is
// the most significant local bit).

/// m <- op_embedded * m
void apply_left(Matrix& m, const Matrix& op, std::span<const int> targets, int n_qubits);

/// m <- m * op_embedded^dagger
void apply_right_adjoint(Matrix& m, const Matrix& op, std::span<const int> targets, int n_qubits);

/// m <- L m R^dagger
void apply_sandwich(Matrix& m, const Matrix& left, const Matrix& right,
                    std::span<const int> targets, int n_qubits);

/// m <- sum_k K_k m K_k^dagger
void apply_operator_sum(Matrix& m, std::span<const Matrix> ops,
                        std::span<const int> targets, int n_qubits);

/// Partial trace of an arbitrary square matrix, keeping `keep` in the given
/// order (which becomes the qubit order of the result).
Matrix partial_trace(const Matrix& m, std::span<const int> keep, int n_qubits);

/// Validates a target list against a register: in range, distinct, and
/// matching the operator dimension. Throws std::invalid_argument.
void check_targets(std::span<const int> targets, int n_qubits, Eigen::Index op_dim);

}  // namespace telecut::kernels

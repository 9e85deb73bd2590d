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

#include <vector>

#include "telecut/cutting/decomposition.hpp"
#include "telecut/noise/local_noise.hpp"
#include "telecut/qsim/density_matrix.hpp"

namespace telecut::cutting {

/// Noisy GHZ-n prepared directly: H on qubit 0, then CNOT(0 -> c) for each
/// c, each gate followed by its local depolarizing channel.
DensityMatrix uncut_ghz_state(int ghz_size, const noise::LocalNoise& local);

/// Z-string expectation values of the uncut noisy GHZ-n circuit.
std::vector<double> uncut_expectations(int ghz_size, const noise::LocalNoise& local);

/// Deterministic enumeration of the cut decomposition: every CNOT is replaced
/// by sum_ij alpha_i alpha_j (A_i (x) B_i) rho (A_j (x) B_j)^dagger, followed
/// by the gate's own depolarizing channel, and every Z-string is read out.
std::vector<double> exact_cut_expectations(int ghz_size, const noise::LocalNoise& local,
                                           const PauliCutDecomposition& decomposition =
                                               cnot_decomposition());

/// Z-string expectations from the diagonal of an arbitrary square matrix.
std::vector<double> diagonal_z_expectations(const Matrix& m);

}  // namespace telecut::cutting

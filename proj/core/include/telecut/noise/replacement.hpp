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

#include "telecut/qsim/density_matrix.hpp"
#include "telecut/qsim/kraus.hpp"

namespace telecut::noise {

/// Eigenvalues at or below this are dropped when building Kraus operators.
inline constexpr double kReplacementEigenCutoff = 1e-12;

/// Channel rho -> Tr(rho) * target on `qubits`, with Kraus operators
/// sqrt(lambda_i) |psi_i><j| over the eigenpairs of `target` and the
/// computational basis states |j>.
KrausChannel replacement_channel(const DensityMatrix& target, std::vector<int> qubits);

}  // namespace telecut::noise

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

/// Completeness residuals above this are rejected when building a channel.
inline constexpr double kKrausRejectTolerance = 1e-6;

/// A CPTP map in operator-sum form on an ordered list of qubits.
struct KrausChannel {
  std::vector<Matrix> operators;
  std::vector<int> targets;
  std::string name;

  /// Validates shapes, distinct targets and completeness.
  static KrausChannel make(std::vector<Matrix> operators, std::vector<int> targets,
                           std::string name = {});

  /// max |sum_k K_k^dagger K_k - I| elementwise.
  double completeness_residual() const;
  /// Same operators on different qubits.
  KrausChannel retargeted(std::vector<int> new_targets) const;
};

DensityMatrix apply_kraus(DensityMatrix state, const KrausChannel& channel);

}  // namespace telecut

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

namespace telecut::metrics {

/// Fidelity sampled on an ascending grid of a swept parameter.
struct FidelityCurve {
  std::string param_name;  // "n_add" or "n_shots"
  int ghz_size = 0;
  std::vector<double> grid;
  std::vector<double> values;
  /// Standard error per point; zero for exact curves.
  std::vector<double> std_errors;
  /// Seeds averaged per point; 1 for exact curves.
  int n_seeds = 1;

  /// Throws std::invalid_argument on length mismatches, a non-ascending grid,
  /// or (when `unit_interval`) values outside [0, 1].
  void validate(bool unit_interval = true) const;
  std::size_t size() const { return grid.size(); }
};

/// Central differences on interior points, one-sided at the ends, taken with
/// respect to the raw grid values.
FidelityCurve finite_difference_derivative(const FidelityCurve& curve);

/// Piecewise-linear interpolation in (log x, F), clamped to the end values
/// outside the grid.
double interpolate_log(const FidelityCurve& curve, double x);

}  // namespace telecut::metrics

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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "telecut/metrics/fidelity_curve.hpp"

namespace telecut::experiments {

enum class ThresholdStatus {
  kFound,
  kAboveRange,  // cut fidelity exceeds every remote value: no link noise matches
  kBelowRange,  // cut fidelity is below every remote value on the grid
};

std::string_view to_string(ThresholdStatus status);

/// n_add at which the remote curve meets a cut fidelity.
struct ThresholdRecord {
  int ghz_size = 0;
  std::uint64_t n_shots = 0;
  double cut_fidelity = 0.0;
  ThresholdStatus status = ThresholdStatus::kFound;
  /// First crossing; set only when status is kFound.
  std::optional<double> n_add_threshold;
  /// Every crossing on the grid, ascending.
  std::vector<double> crossings;
  /// More than one crossing: the remote curve is not monotone there.
  bool ambiguous = false;
};

/// Solves F_remote(n_add) = cut_fidelity by linear interpolation in
/// (log n_add, F) between bracketing grid points. Never extrapolates.
ThresholdRecord find_threshold(const metrics::FidelityCurve& remote, double cut_fidelity);

struct CrossoverRecord {
  int ghz_size = 0;
  /// Mean remote fidelity over n_add <= the plateau bound.
  double plateau_fidelity = 0.0;
  /// Smallest grid shot count whose cut fidelity exceeds the plateau.
  std::optional<std::uint64_t> n_shots;
};

/// Matches curves by ghz_size. Sizes missing from either set are skipped.
std::vector<CrossoverRecord> find_crossover(const std::vector<metrics::FidelityCurve>& remote,
                                            const std::vector<metrics::FidelityCurve>& cut,
                                            double plateau_max_n_add = 1e-3);

/// Shot count at which a cut curve first reaches `target`, interpolated in
/// (log n_shots, F). Empty when the curve never reaches it; the first grid
/// point when it starts above.
std::optional<double> shots_for_fidelity(const metrics::FidelityCurve& cut, double target);

}  // namespace telecut::experiments

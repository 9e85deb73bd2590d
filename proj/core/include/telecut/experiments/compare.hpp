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
#include <vector>

#include "telecut/experiments/config.hpp"
#include "telecut/experiments/threshold.hpp"
#include "telecut/metrics/fidelity_curve.hpp"

namespace telecut::experiments {

/// Cut shots needed to reach a fidelity level for one GHZ size.
struct TargetShotsRecord {
  int ghz_size = 0;
  double target_fidelity = 0.0;
  std::optional<double> n_shots;
};

struct CompareResult {
  std::vector<metrics::FidelityCurve> remote;
  /// Sampled on the union of n_shots_grid and threshold_budgets.
  std::vector<metrics::FidelityCurve> cut;
  /// One record per (size, budget), sizes outermost.
  std::vector<ThresholdRecord> thresholds;
  std::vector<CrossoverRecord> crossovers;
  std::vector<TargetShotsRecord> target_shots;
};

/// Shot grid used by the cut arm of run_compare.
std::vector<std::uint64_t> compare_shots_grid(const SweepConfig& config);

/// Both sweeps plus thresholds at each budget, crossovers against the remote
/// plateau and the shot count reaching target_fidelity.
CompareResult run_compare(const SweepConfig& config);

}  // namespace telecut::experiments

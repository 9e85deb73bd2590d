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
#include <vector>

#include "telecut/experiments/config.hpp"
#include "telecut/metrics/fidelity_curve.hpp"

namespace telecut::experiments {

/// Hellinger fidelity of remote-gate GHZ-n against the ideal GHZ
/// distribution, one curve per size over n_add_grid.
std::vector<metrics::FidelityCurve> run_remote_sweep(const SweepConfig& config);

/// Seed-averaged Hellinger fidelity of cut GHZ-n, one curve per size over
/// n_shots_grid.
std::vector<metrics::FidelityCurve> run_cut_sweep(const SweepConfig& config);

/// Same over an explicit shot grid.
std::vector<metrics::FidelityCurve> run_cut_sweep(const SweepConfig& config,
                                                  const std::vector<std::uint64_t>& shots_grid);

/// Seed for repetition `rep` of the cut estimate of GHZ-`size` at `n_shots`.
Seed cut_point_seed(Seed master, int size, std::uint64_t n_shots, int rep);
/// Seed for the sampled remote distribution of GHZ-`size` at grid index.
Seed remote_point_seed(Seed master, int size, std::size_t index);

}  // namespace telecut::experiments

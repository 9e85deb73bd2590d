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

#include "telecut/experiments/compare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "telecut/experiments/sweep.hpp"

namespace telecut::experiments {

std::vector<std::uint64_t> compare_shots_grid(const SweepConfig& config) {
  std::vector<std::uint64_t> grid = config.n_shots_grid;
  grid.insert(grid.end(), config.threshold_budgets.begin(), config.threshold_budgets.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

CompareResult run_compare(const SweepConfig& config) {
  config.validate();
  CompareResult out;
  out.remote = run_remote_sweep(config);
  out.cut = run_cut_sweep(config, compare_shots_grid(config));
  for (std::size_t s = 0; s < config.ghz_sizes.size(); ++s) {
    const auto& remote = out.remote[s];
    const auto& cut = out.cut[s];
    for (std::uint64_t budget : config.threshold_budgets) {
      const auto it = std::find(cut.grid.begin(), cut.grid.end(), static_cast<double>(budget));
      if (it == cut.grid.end()) throw std::logic_error("threshold budget missing from cut grid");
      ThresholdRecord rec = find_threshold(remote, cut.values[static_cast<std::size_t>(
                                                       it - cut.grid.begin())]);
      rec.n_shots = budget;
      out.thresholds.push_back(std::move(rec));
    }
    out.target_shots.push_back({cut.ghz_size, config.target_fidelity,
                                shots_for_fidelity(cut, config.target_fidelity)});
  }
  out.crossovers = find_crossover(out.remote, out.cut, config.plateau_max_n_add);
  return out;
}

}  // namespace telecut::experiments

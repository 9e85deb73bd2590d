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

#include "telecut/experiments/sweep.hpp"

#include <cmath>
#include <memory>

#include "telecut/cutting/estimator.hpp"
#include "telecut/experiments/parallel.hpp"
#include "telecut/metrics/metrics.hpp"
#include "telecut/telegate/telegate.hpp"

namespace telecut::experiments {
namespace {

constexpr std::uint64_t kRemoteArm = 0x72656d6f7465ULL;
constexpr std::uint64_t kCutArm = 0x637574ULL;

}  // namespace

Seed cut_point_seed(Seed master, int size, std::uint64_t n_shots, int rep) {
  return derive_seed(master, {kCutArm, static_cast<std::uint64_t>(size), n_shots,
                              static_cast<std::uint64_t>(rep)});
}

Seed remote_point_seed(Seed master, int size, std::size_t index) {
  return derive_seed(master, {kRemoteArm, static_cast<std::uint64_t>(size), index});
}

std::vector<metrics::FidelityCurve> run_remote_sweep(const SweepConfig& config) {
  config.validate();
  const auto& grid = config.n_add_grid;
  const std::size_t per_size = grid.size();
  std::vector<double> values(config.ghz_sizes.size() * per_size);
  parallel_for(values.size(), config.jobs, [&](std::size_t task) {
    const std::size_t s = task / per_size;
    const std::size_t i = task % per_size;
    const int size = config.ghz_sizes[s];
    noise::TransducerParams params = config.transducer;
    params.n_add = grid[i];
    const OutcomeDistribution dist =
        telegate::build_ghz_remote(size, params, config.local, config.profile);
    const OutcomeDistribution ideal = OutcomeDistribution::ghz(size);
    if (config.remote_shots == 0) {
      values[task] = metrics::hellinger_fidelity(dist, ideal);
    } else {
      const auto counts =
          sample_counts(dist, config.remote_shots, remote_point_seed(config.seed, size, i));
      values[task] = metrics::hellinger_fidelity(OutcomeDistribution::from_counts(counts), ideal);
    }
  });
  std::vector<metrics::FidelityCurve> curves;
  for (std::size_t s = 0; s < config.ghz_sizes.size(); ++s) {
    metrics::FidelityCurve c;
    c.param_name = "n_add";
    c.ghz_size = config.ghz_sizes[s];
    c.grid = grid;
    c.values.assign(values.begin() + static_cast<std::ptrdiff_t>(s * per_size),
                    values.begin() + static_cast<std::ptrdiff_t>((s + 1) * per_size));
    c.std_errors.assign(per_size, 0.0);
    c.n_seeds = 1;
    curves.push_back(std::move(c));
  }
  return curves;
}

std::vector<metrics::FidelityCurve> run_cut_sweep(const SweepConfig& config) {
  return run_cut_sweep(config, config.n_shots_grid);
}

std::vector<metrics::FidelityCurve> run_cut_sweep(const SweepConfig& config,
                                                  const std::vector<std::uint64_t>& shots_grid) {
  config.validate();
  std::vector<metrics::FidelityCurve> curves;
  const auto reps = static_cast<std::size_t>(config.repetitions);
  for (int size : config.ghz_sizes) {
    const cutting::CutEstimator estimator(size, config.local, config.profile);
    const OutcomeDistribution ideal = OutcomeDistribution::ghz(size);
    std::vector<double> fid(shots_grid.size() * reps);
    parallel_for(fid.size(), config.jobs, [&](std::size_t task) {
      const std::size_t i = task / reps;
      const int rep = static_cast<int>(task % reps);
      const auto result = estimator.sample(
          shots_grid[i], cut_point_seed(config.seed, size, shots_grid[i], rep), config.sampling);
      fid[task] = metrics::hellinger_fidelity(result.probabilities, ideal.probabilities());
    });
    metrics::FidelityCurve c;
    c.param_name = "n_shots";
    c.ghz_size = size;
    c.n_seeds = config.repetitions;
    for (std::size_t i = 0; i < shots_grid.size(); ++i) {
      double mean = 0.0;
      for (std::size_t r = 0; r < reps; ++r) mean += fid[i * reps + r];
      mean /= static_cast<double>(reps);
      double var = 0.0;
      for (std::size_t r = 0; r < reps; ++r) {
        const double d = fid[i * reps + r] - mean;
        var += d * d;
      }
      const double se =
          reps > 1 ? std::sqrt(var / static_cast<double>(reps - 1) / static_cast<double>(reps))
                   : 0.0;
      c.grid.push_back(static_cast<double>(shots_grid[i]));
      c.values.push_back(mean);
      c.std_errors.push_back(se);
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

}  // namespace telecut::experiments

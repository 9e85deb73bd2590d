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
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "telecut/cutting/estimator.hpp"
#include "telecut/noise/local_noise.hpp"
#include "telecut/noise/transducer.hpp"
#include "telecut/qsim/random.hpp"

namespace telecut::experiments {

struct SweepConfig {
  std::vector<int> ghz_sizes{2, 3, 4, 5};
  std::vector<double> n_add_grid;           // default: 30 log-spaced points in [1e-4, 1]
  std::vector<std::uint64_t> n_shots_grid;  // default: 25 log-spaced points in [10, 1e4]
  std::vector<std::uint64_t> threshold_budgets{20, 200, 500, 1000};
  noise::TransducerParams transducer;       // n_add is swept, the rest is fixed
  noise::LocalNoise local = noise::LocalNoise::standard();
  noise::NoiseProfile profile = noise::NoiseProfile::kPhysical;
  cutting::SamplingMode sampling = cutting::SamplingMode::kPerSubexperiment;
  Seed seed = 20250101;
  int repetitions = 20;
  int jobs = 1;
  /// 0 reads the remote arm's exact distribution; otherwise that many shots
  /// are sampled per remote point.
  std::uint64_t remote_shots = 0;
  /// Remote fidelities at n_add <= this value form the local-noise plateau.
  double plateau_max_n_add = 1e-3;
  /// Fidelity level whose required cut shot count is reported.
  double target_fidelity = 0.9;

  SweepConfig();
  void validate() const;
};

/// Parses flat `key = value` text. Lines starting with '#' are comments.
/// Lists are comma separated; grids also accept `logspace(lo, hi, points)`.
/// Unknown or repeated keys throw std::invalid_argument.
SweepConfig parse_config(std::string_view text, SweepConfig base = {});
SweepConfig load_config(const std::filesystem::path& path, SweepConfig base = {});

/// The configuration as ordered (key, value) strings that parse back to the
/// same values.
std::vector<std::pair<std::string, std::string>> config_echo(const SweepConfig& config);

std::vector<double> log_space(double lo, double hi, int points);
/// Rounded log-spaced integers with duplicates removed.
std::vector<std::uint64_t> log_space_integers(double lo, double hi, int points);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace telecut::experiments

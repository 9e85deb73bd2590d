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
#include <string_view>
#include <vector>

#include "telecut/cutting/decomposition.hpp"
#include "telecut/cutting/qpd_sampler.hpp"
#include "telecut/cutting/reconstruction.hpp"
#include "telecut/noise/local_noise.hpp"
#include "telecut/qsim/random.hpp"

namespace telecut::cutting {

/// How N shots are spent for each observable.
enum class SamplingMode {
  /// N shots, each drawing an independent term selection per cut.
  kPerShot,
  /// Every admissible subexperiment runs N shots and is weighted by its
  /// quasiprobability mass.
  kPerSubexperiment,
};

SamplingMode parse_sampling_mode(std::string_view text);
std::string_view to_string(SamplingMode mode);

/// Cut-arm model of a GHZ-n circuit whose n-1 CNOTs are all cut.
///
/// Modules only share classical data, so a subexperiment's joint outcome is a
/// product of independent +-1 module outcomes. Each cut side is reduced to a
/// linear map on the data qubit's 2x2 operator (ancilla measured and
/// weighted by its eigenvalue), and the central module is evaluated over a
/// prefix tree of term selections. Every subexperiment mean is therefore
/// exact, and sampling draws from the exact outcome distribution.
class CutEstimator {
 public:
  static constexpr int kMaxCuts = 4;

  CutEstimator(int ghz_size, const noise::LocalNoise& local,
               noise::NoiseProfile profile = noise::NoiseProfile::kPhysical,
               PauliCutDecomposition decomposition = cnot_decomposition());

  int ghz_size() const { return ghz_size_; }
  int n_cuts() const { return ghz_size_ - 1; }
  std::size_t n_observables() const { return std::size_t{1} << ghz_size_; }
  const QpdSampler& sampler() const { return sampler_; }

  /// Number of joint term selections, |outcomes|^cuts.
  std::size_t n_configs() const { return n_configs_; }
  std::vector<TermSelection> config(std::size_t index) const;
  std::size_t config_index(const std::vector<TermSelection>& selections) const;

  /// Mean of the +-1 product outcome of a subexperiment for a Z-string.
  double product_mean(std::size_t config, std::uint32_t observable) const;
  /// prod_cuts q s_ij (k == 1 ? -1 : 1)
  double config_weight(std::size_t config) const;
  double config_probability(std::size_t config) const;

  /// Expected value of the estimator for every Z-string.
  std::vector<double> estimator_means() const;

  /// One estimate per Z-string from N shots.
  std::vector<double> sample_expectations(std::uint64_t n_shots, Seed seed,
                                          SamplingMode mode) const;

  ReconstructionResult sample(std::uint64_t n_shots, Seed seed, SamplingMode mode) const;

 private:
  struct Group {
    double mass = 0.0;  // |probability x weight| of each member
    double nu = 0.0;    // sign(weight) x mean
    std::uint64_t members = 0;
  };

  int observable_bit(std::uint32_t observable, int qubit) const {
    return static_cast<int>((observable >> (ghz_size_ - 1 - qubit)) & 1U);
  }
  void build_tables(const noise::LocalNoise& local, noise::NoiseProfile profile);
  void build_groups();

  int ghz_size_;
  QpdSampler sampler_;
  std::size_t n_outcomes_ = 0;
  std::size_t n_configs_ = 0;
  // central_[2 * config + b]: mean of the central module's outcome with Z^b
  // on the central data qubit.
  std::vector<double> central_;
  // peripheral_[2 * outcome + b]: same for a peripheral module.
  std::vector<double> peripheral_;
  std::vector<double> outcome_weight_;
  std::vector<double> outcome_mass_;
  std::vector<std::vector<Group>> groups_;
};

/// Convenience wrapper building a CutEstimator for one estimate.
ReconstructionResult sample_cut_estimate(int ghz_size, std::uint64_t n_shots,
                                         const noise::LocalNoise& local, Seed seed,
                                         SamplingMode mode = SamplingMode::kPerSubexperiment,
                                         noise::NoiseProfile profile = noise::NoiseProfile::kPhysical);

}  // namespace telecut::cutting

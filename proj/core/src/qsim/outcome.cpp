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

#include "telecut/qsim/outcome.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace telecut {
namespace {

int bits_for_length(std::size_t len) {
  int n = 0;
  while ((std::size_t{1} << n) < len) {
    ++n;
  }
  if ((std::size_t{1} << n) != len || len < 2) {
    throw std::invalid_argument("distribution length " + std::to_string(len) +
                                " is not a power of two >= 2");
  }
  return n;
}

constexpr double kClampSlack = 1e-9;
constexpr double kCorruptDiagonal = -1e-6;

}  // namespace

OutcomeDistribution OutcomeDistribution::make(std::vector<double> probabilities) {
  const int n = bits_for_length(probabilities.size());
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("negative or NaN probability " + std::to_string(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total));
  }
  return OutcomeDistribution(n, std::move(probabilities));
}

OutcomeDistribution OutcomeDistribution::from_counts(const std::vector<std::uint64_t>& counts) {
  const int n = bits_for_length(counts.size());
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) {
    throw std::invalid_argument("counts are all zero");
  }
  std::vector<double> p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return OutcomeDistribution(n, std::move(p));
}

OutcomeDistribution OutcomeDistribution::ghz(int n_bits) {
  if (n_bits < 1 || n_bits > 62) {
    throw std::invalid_argument("GHZ width out of range");
  }
  std::vector<double> p(std::size_t{1} << n_bits, 0.0);
  p.front() = 0.5;
  p.back() = 0.5;
  return OutcomeDistribution(n_bits, std::move(p));
}

OutcomeDistribution basis_probabilities(const DensityMatrix& state) {
  const Matrix& m = state.matrix();
  std::vector<double> p(static_cast<std::size_t>(m.rows()));
  bool clamped = false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double v = m(i, i).real();
    if (v < kCorruptDiagonal) {
      throw std::domain_error("diagonal entry " + std::to_string(v) + " at index " +
                              std::to_string(i) + " indicates a corrupted state");
    }
    if (v < 0.0) {
      v = 0.0;
      clamped = true;
    }
    p[static_cast<std::size_t>(i)] = v;
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(total > 0.0)) {
    throw std::domain_error("state has no probability mass on the diagonal");
  }
  if (clamped || std::abs(total - 1.0) > kClampSlack) {
    for (double& v : p) {
      v /= total;
    }
  }
  return OutcomeDistribution::make(std::move(p));
}

std::vector<std::uint64_t> sample_counts(const OutcomeDistribution& dist, std::uint64_t shots,
                                         Seed seed) {
  if (shots == 0) {
    throw std::invalid_argument("shots must be positive");
  }
  Rng rng = make_rng(seed);
  const auto& p = dist.probabilities();
  std::vector<std::uint64_t> counts(p.size(), 0);
  // Sequential conditional binomials.
  std::uint64_t remaining = shots;
  double mass_left = 1.0;
  for (std::size_t i = 0; i + 1 < p.size() && remaining > 0; ++i) {
    if (p[i] <= 0.0) {
      mass_left -= p[i];
      continue;
    }
    const double q = mass_left > 0.0 ? std::min(1.0, p[i] / mass_left) : 1.0;
    std::binomial_distribution<std::uint64_t> draw(remaining, q);
    const std::uint64_t k = draw(rng);
    counts[i] = k;
    remaining -= k;
    mass_left -= p[i];
  }
  counts.back() += remaining;
  return counts;
}

}  // namespace telecut

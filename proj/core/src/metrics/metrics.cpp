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

#include "telecut/metrics/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace telecut::metrics {

double hellinger_fidelity(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("distribution lengths differ (" + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()) + ")");
  }
  double bc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bc += std::sqrt(p[i] * q[i]);
  }
  return bc * bc;
}

double hellinger_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  return hellinger_fidelity(std::span<const double>(p.probabilities()),
                            std::span<const double>(q.probabilities()));
}

double qpd_variance(std::span<const double> coefficients, std::span<const double> variances) {
  if (coefficients.size() != variances.size()) {
    throw std::invalid_argument("coefficient and variance counts differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < variances.size(); ++i) {
    if (variances[i] < 0.0) {
      throw std::invalid_argument("negative variance at index " + std::to_string(i));
    }
    total += coefficients[i] * coefficients[i] * variances[i];
  }
  return total;
}

std::uint64_t required_shots(int n_cuts, double epsilon) {
  if (n_cuts < 1) {
    throw std::invalid_argument("n_cuts must be >= 1");
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
  const double value = std::pow(9.0, n_cuts) / (epsilon * epsilon);
  if (!(value < 1.8e19)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  const double nearest = std::round(value);
  if (std::abs(value - nearest) <= 1e-9 * nearest) {
    return static_cast<std::uint64_t>(nearest);
  }
  return static_cast<std::uint64_t>(std::ceil(value));
}

}  // namespace telecut::metrics

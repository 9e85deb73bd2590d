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

#include "telecut/cutting/qpd_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace telecut::cutting {

QpdSampler::QpdSampler(PauliCutDecomposition decomposition)
    : decomposition_(std::move(decomposition)), cost_(decomposition_.sampling_cost()) {
  const int n = static_cast<int>(decomposition_.size());
  for (int i = 0; i < n; ++i) {
    outcomes_.push_back({i, i, 0});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      outcomes_.push_back({i, j, 0});
      outcomes_.push_back({i, j, 1});
    }
  }
  double acc = 0.0;
  for (const TermSelection& sel : outcomes_) {
    const double p = probability(sel);
    pmf_.push_back(p);
    acc += p;
    cdf_.push_back(acc);
  }
  if (std::abs(acc - 1.0) > 1e-12) {
    throw std::logic_error("cut pmf does not sum to one");
  }
  cdf_.back() = 1.0;
}

double QpdSampler::probability(const TermSelection& sel) const {
  const int n = static_cast<int>(decomposition_.size());
  if (sel.i < 0 || sel.j < 0 || sel.i >= n || sel.j >= n || sel.k < 0 || sel.k > 1) {
    throw std::out_of_range("term selection out of range");
  }
  if (sel.i == sel.j && sel.k == 1) {
    return 0.0;
  }
  return std::abs(decomposition_[static_cast<std::size_t>(sel.i)].coefficient *
                  decomposition_[static_cast<std::size_t>(sel.j)].coefficient) /
         cost_;
}

int QpdSampler::sign(const TermSelection& sel) const {
  const double a = decomposition_[static_cast<std::size_t>(sel.i)].coefficient;
  const double b = decomposition_[static_cast<std::size_t>(sel.j)].coefficient;
  return (a < 0.0) == (b < 0.0) ? 1 : -1;
}

double QpdSampler::weight(const TermSelection& sel) const {
  return cost_ * sign(sel) * (sel.k == 1 ? -1.0 : 1.0);
}

double QpdSampler::signed_mass(const TermSelection& sel) const {
  return decomposition_[static_cast<std::size_t>(sel.i)].coefficient *
         decomposition_[static_cast<std::size_t>(sel.j)].coefficient * (sel.k == 1 ? -1.0 : 1.0);
}

std::size_t QpdSampler::sample_index(Rng& rng) const {
  const double u = std::generate_canonical<double, 53>(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
}

}  // namespace telecut::cutting

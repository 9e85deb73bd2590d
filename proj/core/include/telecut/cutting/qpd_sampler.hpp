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

#include <span>
#include <vector>

#include "telecut/cutting/decomposition.hpp"
#include "telecut/qsim/random.hpp"

namespace telecut::cutting {

/// One sampled cut configuration. k = 0 estimates the real part of the
/// (i, j) overlap with X-basis ancillas, k = 1 the imaginary part with
/// Y-basis ancillas. Diagonal terms (i == j) use no ancillas and k = 0.
struct TermSelection {
  int i = 0;
  int j = 0;
  int k = 0;

  bool diagonal() const { return i == j; }
  friend bool operator==(const TermSelection&, const TermSelection&) = default;
};

/// Quasiprobability distribution over term selections of one cut.
class QpdSampler {
 public:
  explicit QpdSampler(PauliCutDecomposition decomposition);

  const PauliCutDecomposition& decomposition() const { return decomposition_; }
  /// Admissible selections: diagonal (i, i, 0), then off-diagonal (i, j, k).
  std::span<const TermSelection> outcomes() const { return outcomes_; }
  std::span<const double> pmf() const { return pmf_; }
  std::size_t size() const { return outcomes_.size(); }
  double cost() const { return cost_; }

  /// p(i, j, k); zero for (i, i, 1).
  double probability(const TermSelection& sel) const;
  /// sgn(alpha_i) sgn(alpha_j)
  int sign(const TermSelection& sel) const;
  /// Per-shot multiplier q * s_ij * (k == 1 ? -1 : 1).
  double weight(const TermSelection& sel) const;
  /// probability * weight = alpha_i alpha_j (k == 1 ? -1 : 1)
  double signed_mass(const TermSelection& sel) const;

  /// Index into outcomes() drawn from the pmf.
  std::size_t sample_index(Rng& rng) const;

 private:
  PauliCutDecomposition decomposition_;
  std::vector<TermSelection> outcomes_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
  double cost_ = 0.0;
};

}  // namespace telecut::cutting

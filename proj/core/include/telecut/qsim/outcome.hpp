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

#include "telecut/qsim/density_matrix.hpp"
#include "telecut/qsim/random.hpp"

namespace telecut {

/// Probabilities of computational-basis outcomes, indexed by bitstring in
/// binary order (qubit 0 is the most significant bit).
class OutcomeDistribution {
 public:
  /// Validates length 2^n, entries >= 0 and unit sum within 1e-9.
  static OutcomeDistribution make(std::vector<double> probabilities);
  /// Normalizes counts by their total. Zero total is rejected.
  static OutcomeDistribution from_counts(const std::vector<std::uint64_t>& counts);
  /// Equal weight on |0...0> and |1...1>.
  static OutcomeDistribution ghz(int n_bits);

  int n_bits() const { return n_bits_; }
  const std::vector<double>& probabilities() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }
  std::size_t size() const { return p_.size(); }

 private:
  OutcomeDistribution(int n_bits, std::vector<double> p) : n_bits_(n_bits), p_(std::move(p)) {}

  int n_bits_;
  std::vector<double> p_;
};

/// Diagonal of rho. Entries in [-1e-9, 0) are clamped and the vector
/// renormalized; anything below -1e-6 throws std::domain_error. Entries
/// between the two thresholds are also clamped.
OutcomeDistribution basis_probabilities(const DensityMatrix& state);

/// Multinomial sample of `shots` draws. Deterministic for a fixed seed.
std::vector<std::uint64_t> sample_counts(const OutcomeDistribution& dist, std::uint64_t shots,
                                         Seed seed);

}  // namespace telecut

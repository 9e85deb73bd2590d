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
#include <span>
#include <vector>

namespace telecut::cutting {

struct ReconstructionResult {
  /// Z-string expectation values; bit n-1-q of the index flags qubit q.
  std::vector<double> expectations;
  /// Reconstructed distribution after clamping negatives and renormalizing.
  std::vector<double> probabilities;
  /// Integer counts summing to the requested total.
  std::vector<std::uint64_t> counts;
  std::uint64_t shots_per_subexperiment = 0;
  /// True when any raw probability was negative.
  bool clamped = false;
};

/// p_x = 2^-n sum_s (-1)^{popcount(x & s)} E_s. Entries may be negative.
std::vector<double> walsh_hadamard_probabilities(std::span<const double> expectations);

/// E_s = sum_x (-1)^{popcount(x & s)} p_x, the inverse map.
std::vector<double> z_string_expectations(std::span<const double> probabilities);

/// Rounds N p to integers summing to N (largest remainder, ties to the
/// lower index).
std::vector<std::uint64_t> largest_remainder_counts(std::span<const double> probabilities,
                                                    std::uint64_t total);

/// Walsh-Hadamard transform, clamp at zero, renormalize, round to counts.
/// If nothing positive survives the clamp the uniform distribution is used.
ReconstructionResult reconstruct_distribution(std::span<const double> expectations,
                                              std::uint64_t total_counts);

}  // namespace telecut::cutting

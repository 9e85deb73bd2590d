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

#include "telecut/cutting/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace telecut::cutting {
namespace {

void check_power_of_two(std::size_t len) {
  if (len < 2 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("expectation vector length " + std::to_string(len) +
                                " is not a power of two >= 2");
  }
}

// Unnormalized in-place fast Walsh-Hadamard transform.
void fwht(std::vector<double>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

}  // namespace

std::vector<double> walsh_hadamard_probabilities(std::span<const double> expectations) {
  check_power_of_two(expectations.size());
  std::vector<double> p(expectations.begin(), expectations.end());
  fwht(p);
  const double scale = 1.0 / static_cast<double>(p.size());
  for (double& v : p) {
    v *= scale;
  }
  return p;
}

std::vector<double> z_string_expectations(std::span<const double> probabilities) {
  check_power_of_two(probabilities.size());
  std::vector<double> e(probabilities.begin(), probabilities.end());
  fwht(e);
  return e;
}

std::vector<std::uint64_t> largest_remainder_counts(std::span<const double> probabilities,
                                                    std::uint64_t total) {
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  std::vector<std::pair<double, std::size_t>> remainders;
  remainders.reserve(probabilities.size());
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double exact = std::max(0.0, probabilities[i]) * static_cast<double>(total);
    const double floor_v = std::floor(exact);
    counts[i] = static_cast<std::uint64_t>(floor_v);
    assigned += counts[i];
    remainders.emplace_back(exact - floor_v, i);
  }
  if (assigned > total) {
    throw std::invalid_argument("probabilities sum above one");
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t r = 0; assigned < total; ++r) {
    ++counts[remainders[r % remainders.size()].second];
    ++assigned;
  }
  return counts;
}

ReconstructionResult reconstruct_distribution(std::span<const double> expectations,
                                              std::uint64_t total_counts) {
  ReconstructionResult out;
  out.expectations.assign(expectations.begin(), expectations.end());
  std::vector<double> p = walsh_hadamard_probabilities(expectations);
  for (double& v : p) {
    if (v < 0.0) {
      v = 0.0;
      out.clamped = true;
    }
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (total > 0.0) {
    for (double& v : p) {
      v /= total;
    }
  } else {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
  }
  out.counts = largest_remainder_counts(p, total_counts);
  out.probabilities = std::move(p);
  out.shots_per_subexperiment = total_counts;
  return out;
}

}  // namespace telecut::cutting

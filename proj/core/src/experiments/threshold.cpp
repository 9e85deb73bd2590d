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

#include "telecut/experiments/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace telecut::experiments {
namespace {

double log_interp(double x0, double x1, double f0, double f1, double target) {
  if (f0 == f1) return x0;
  const double t = (target - f0) / (f1 - f0);
  return std::exp(std::log(x0) + t * (std::log(x1) - std::log(x0)));
}

}  // namespace

std::string_view to_string(ThresholdStatus status) {
  switch (status) {
    case ThresholdStatus::kFound: return "found";
    case ThresholdStatus::kAboveRange: return "above_range";
    case ThresholdStatus::kBelowRange: return "below_range";
  }
  return "unknown";
}

ThresholdRecord find_threshold(const metrics::FidelityCurve& remote, double cut_fidelity) {
  remote.validate();
  if (remote.grid.empty()) {
    throw std::invalid_argument("remote curve is empty");
  }
  ThresholdRecord rec;
  rec.ghz_size = remote.ghz_size;
  rec.cut_fidelity = cut_fidelity;
  const auto& x = remote.grid;
  const auto& f = remote.values;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f[i] == cut_fidelity) {
      rec.crossings.push_back(x[i]);
      continue;
    }
    if (i + 1 < x.size() && f[i + 1] != cut_fidelity &&
        (f[i] - cut_fidelity) * (f[i + 1] - cut_fidelity) < 0.0) {
      rec.crossings.push_back(log_interp(x[i], x[i + 1], f[i], f[i + 1], cut_fidelity));
    }
  }
  if (rec.crossings.empty()) {
    const double hi = *std::max_element(f.begin(), f.end());
    rec.status = cut_fidelity > hi ? ThresholdStatus::kAboveRange : ThresholdStatus::kBelowRange;
    return rec;
  }
  rec.status = ThresholdStatus::kFound;
  rec.n_add_threshold = rec.crossings.front();
  rec.ambiguous = rec.crossings.size() > 1;
  return rec;
}

std::vector<CrossoverRecord> find_crossover(const std::vector<metrics::FidelityCurve>& remote,
                                            const std::vector<metrics::FidelityCurve>& cut,
                                            double plateau_max_n_add) {
  std::vector<CrossoverRecord> out;
  for (const auto& r : remote) {
    const auto c = std::find_if(cut.begin(), cut.end(),
                                [&](const auto& cc) { return cc.ghz_size == r.ghz_size; });
    if (c == cut.end()) continue;
    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      if (r.grid[i] <= plateau_max_n_add) {
        sum += r.values[i];
        ++count;
      }
    }
    if (count == 0) {
      throw std::invalid_argument("remote grid has no point at or below the plateau bound");
    }
    CrossoverRecord rec;
    rec.ghz_size = r.ghz_size;
    rec.plateau_fidelity = sum / count;
    for (std::size_t i = 0; i < c->grid.size(); ++i) {
      if (c->values[i] > rec.plateau_fidelity) {
        rec.n_shots = static_cast<std::uint64_t>(std::llround(c->grid[i]));
        break;
      }
    }
    out.push_back(rec);
  }
  return out;
}

std::optional<double> shots_for_fidelity(const metrics::FidelityCurve& cut, double target) {
  const auto& x = cut.grid;
  const auto& f = cut.values;
  if (x.empty()) return std::nullopt;
  if (f[0] >= target) return x[0];
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (f[i] < target && f[i + 1] >= target) {
      return log_interp(x[i], x[i + 1], f[i], f[i + 1], target);
    }
  }
  return std::nullopt;
}

}  // namespace telecut::experiments

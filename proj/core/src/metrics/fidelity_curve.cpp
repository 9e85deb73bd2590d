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

#include "telecut/metrics/fidelity_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace telecut::metrics {

void FidelityCurve::validate(bool unit_interval) const {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("curve grid and values differ in length");
  }
  if (!std_errors.empty() && std_errors.size() != grid.size()) {
    throw std::invalid_argument("curve standard errors differ in length");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("curve grid must be strictly ascending");
    }
  }
  if (unit_interval) {
    for (double v : values) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("curve value outside [0, 1]");
      }
    }
  }
}

FidelityCurve finite_difference_derivative(const FidelityCurve& curve) {
  if (curve.grid.size() < 2) {
    throw std::invalid_argument("derivative needs at least two grid points");
  }
  for (std::size_t i = 1; i < curve.grid.size(); ++i) {
    if (curve.grid[i] == curve.grid[i - 1]) {
      throw std::invalid_argument("duplicate grid point in derivative input");
    }
  }
  curve.validate(false);
  const auto& x = curve.grid;
  const auto& f = curve.values;
  const std::size_t n = x.size();
  FidelityCurve out;
  out.param_name = "d_fidelity/d_" + curve.param_name;
  out.ghz_size = curve.ghz_size;
  out.grid = x;
  out.n_seeds = curve.n_seeds;
  out.values.resize(n);
  out.values[0] = (f[1] - f[0]) / (x[1] - x[0]);
  out.values[n - 1] = (f[n - 1] - f[n - 2]) / (x[n - 1] - x[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.values[i] = (f[i + 1] - f[i - 1]) / (x[i + 1] - x[i - 1]);
  }
  out.std_errors.assign(n, 0.0);
  return out;
}

double interpolate_log(const FidelityCurve& curve, double x) {
  if (curve.grid.empty()) {
    throw std::invalid_argument("cannot interpolate an empty curve");
  }
  if (!(x > 0.0)) {
    throw std::invalid_argument("log interpolation needs a positive argument");
  }
  const auto& g = curve.grid;
  if (x <= g.front()) return curve.values.front();
  if (x >= g.back()) return curve.values.back();
  const auto hi = static_cast<std::size_t>(std::upper_bound(g.begin(), g.end(), x) - g.begin());
  const std::size_t lo = hi - 1;
  const double t = (std::log(x) - std::log(g[lo])) / (std::log(g[hi]) - std::log(g[lo]));
  return curve.values[lo] + t * (curve.values[hi] - curve.values[lo]);
}

}  // namespace telecut::metrics

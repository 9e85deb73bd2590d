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

#include "telecut/qsim/outcome.hpp"

namespace telecut::metrics {

/// (sum_i sqrt(p_i q_i))^2
double hellinger_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q);
double hellinger_fidelity(std::span<const double> p, std::span<const double> q);

/// sum_i c_i^2 v_i
double qpd_variance(std::span<const double> coefficients, std::span<const double> variances);

/// ceil(9^n_cuts / epsilon^2): an order-of-magnitude planning figure with the
/// constant factor fixed at 1, not a physical bound. Values within a relative
/// 1e-9 of an integer are treated as that integer so that, e.g., 729/0.09
/// yields 8100. Saturates at UINT64_MAX.
std::uint64_t required_shots(int n_cuts, double epsilon);

}  // namespace telecut::metrics

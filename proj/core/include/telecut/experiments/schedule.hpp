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
#include <functional>
#include <string_view>
#include <vector>

#include "telecut/metrics/fidelity_curve.hpp"

namespace telecut::experiments {

enum class GateDecision { kCut, kRemote };

std::string_view to_string(GateDecision decision);

/// What the scheduler knows about the link serving one nonlocal gate.
struct LinkState {
  double remote_fidelity = 0.0;
  bool bell_available = false;
};

struct GateStep {
  int gate = 0;  // 1-based
  GateDecision decision = GateDecision::kCut;
  /// Equal share of the remaining budget offered to this gate.
  std::uint64_t tentative_shots = 0;
  /// Shots actually charged; zero for remote gates.
  std::uint64_t allocated_shots = 0;
  bool escalated = false;
  /// The escalated shot count did not fit the remaining budget.
  bool infeasible = false;
  /// No shot count on the escalation grid reaches the remote fidelity.
  bool target_unreachable = false;
  double cut_fidelity = 0.0;  // model value at allocated_shots (at tentative for remote)
  double remote_fidelity = 0.0;
  bool bell_available = false;
  std::uint64_t budget_after = 0;
};

struct LinkPlan {
  std::vector<GateStep> steps;
  std::uint64_t total_budget = 0;
  std::uint64_t remaining_budget = 0;

  std::uint64_t spent() const;
  bool feasible() const;
};

using ShotFidelityModel = std::function<double(std::uint64_t shots)>;

/// Greedy cut-or-remote assignment over gates in order. Gate i is offered
/// floor(remaining / gates_left) shots and is cut when the model reaches the
/// link fidelity at that share. Otherwise it runs remotely when a Bell pair
/// is available, and is cut with an escalated share when not. The escalated
/// share is the smallest `escalation_grid` entry whose model fidelity reaches
/// the link fidelity, capped by the remaining budget.
LinkPlan greedy_schedule(const std::vector<LinkState>& links, std::uint64_t total_shots,
                         const ShotFidelityModel& cut_fidelity,
                         const std::vector<std::uint64_t>& escalation_grid);

/// Uses a measured cut curve as the model (log-interpolated, 0 at zero
/// shots) and its grid for escalation.
LinkPlan greedy_schedule(const std::vector<LinkState>& links, std::uint64_t total_shots,
                         const metrics::FidelityCurve& cut_curve);

}  // namespace telecut::experiments

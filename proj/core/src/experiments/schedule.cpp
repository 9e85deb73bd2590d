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

#include "telecut/experiments/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace telecut::experiments {

std::string_view to_string(GateDecision decision) {
  return decision == GateDecision::kCut ? "cut" : "remote";
}

std::uint64_t LinkPlan::spent() const {
  std::uint64_t total = 0;
  for (const auto& s : steps) total += s.allocated_shots;
  return total;
}

bool LinkPlan::feasible() const {
  return std::none_of(steps.begin(), steps.end(), [](const GateStep& s) { return s.infeasible; });
}

LinkPlan greedy_schedule(const std::vector<LinkState>& links, std::uint64_t total_shots,
                         const ShotFidelityModel& cut_fidelity,
                         const std::vector<std::uint64_t>& escalation_grid) {
  const std::uint64_t n = links.size();
  if (n == 0) throw std::invalid_argument("greedy_schedule needs at least one gate");
  if (total_shots < n) throw std::invalid_argument("shot budget is smaller than the gate count");
  if (!cut_fidelity) throw std::invalid_argument("cut fidelity model is empty");
  std::vector<std::uint64_t> grid = escalation_grid;
  std::sort(grid.begin(), grid.end());

  LinkPlan plan;
  plan.total_budget = total_shots;
  std::uint64_t remaining = total_shots;
  for (std::uint64_t i = 0; i < n; ++i) {
    const LinkState& link = links[i];
    GateStep step;
    step.gate = static_cast<int>(i + 1);
    step.remote_fidelity = link.remote_fidelity;
    step.bell_available = link.bell_available;
    step.tentative_shots = remaining / (n - i);
    const double f_share = cut_fidelity(step.tentative_shots);
    if (f_share >= link.remote_fidelity) {
      step.decision = GateDecision::kCut;
      step.allocated_shots = step.tentative_shots;
      step.cut_fidelity = f_share;
    } else if (link.bell_available) {
      step.decision = GateDecision::kRemote;
      step.cut_fidelity = f_share;
    } else {
      step.decision = GateDecision::kCut;
      step.escalated = true;
      const auto reach = std::find_if(grid.begin(), grid.end(), [&](std::uint64_t s) {
        return cut_fidelity(s) >= link.remote_fidelity;
      });
      if (reach == grid.end()) {
        step.target_unreachable = true;
        step.allocated_shots = remaining;
      } else if (*reach > remaining) {
        step.infeasible = true;
        step.allocated_shots = remaining;
      } else {
        step.allocated_shots = *reach;
      }
      step.cut_fidelity = cut_fidelity(step.allocated_shots);
    }
    remaining -= step.allocated_shots;
    step.budget_after = remaining;
    plan.steps.push_back(step);
  }
  plan.remaining_budget = remaining;
  return plan;
}

LinkPlan greedy_schedule(const std::vector<LinkState>& links, std::uint64_t total_shots,
                         const metrics::FidelityCurve& cut_curve) {
  cut_curve.validate();
  if (cut_curve.grid.empty()) throw std::invalid_argument("cut curve is empty");
  std::vector<std::uint64_t> grid;
  for (double g : cut_curve.grid) {
    if (g < 0.0) throw std::invalid_argument("cut curve has a negative shot count");
    grid.push_back(static_cast<std::uint64_t>(std::llround(g)));
  }
  const ShotFidelityModel model = [&cut_curve](std::uint64_t shots) {
    if (shots == 0) return 0.0;
    return metrics::interpolate_log(cut_curve, static_cast<double>(shots));
  };
  return greedy_schedule(links, total_shots, model, grid);
}

}  // namespace telecut::experiments

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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "telecut/experiments/compare.hpp"
#include "telecut/experiments/schedule.hpp"
#include "telecut/experiments/threshold.hpp"
#include "telecut/metrics/fidelity_curve.hpp"

namespace telecut::experiments {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat format);

/// Everything one CLI run produces. Empty members are omitted from the
/// summary.
struct ResultBundle {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<metrics::FidelityCurve> curves;
  std::vector<ThresholdRecord> thresholds;
  std::vector<CrossoverRecord> crossovers;
  std::vector<TargetShotsRecord> target_shots;
  std::optional<LinkPlan> plan;
  std::optional<double> breakeven_efficiency;
};

inline constexpr std::string_view kCurveCsvHeader =
    "ghz_size,param_name,param_value,fidelity,stderr,n_seeds";

/// One row per grid point in curve order, preceded by the header.
void write_curves_csv(std::ostream& out, const std::vector<metrics::FidelityCurve>& curves);

/// JSON summary. Curves are embedded only when `embed_curves` is set.
std::string summary_json(const ResultBundle& bundle, bool embed_curves);

/// csv: curves.csv and summary.json. json: summary.json with curves embedded.
/// Creates `dir` if needed and returns the written paths. Throws
/// std::runtime_error when a file cannot be written.
std::vector<std::filesystem::path> emit_results(const ResultBundle& bundle,
                                                const std::filesystem::path& dir,
                                                OutputFormat format);

}  // namespace telecut::experiments

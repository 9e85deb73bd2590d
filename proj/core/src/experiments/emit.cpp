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

#include "telecut/experiments/emit.hpp"

#include <fstream>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

#include "telecut/experiments/config.hpp"

namespace telecut::experiments {
namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json curve_json(const metrics::FidelityCurve& c) {
  return Json{{"ghz_size", c.ghz_size}, {"param_name", c.param_name},
              {"grid", c.grid},         {"fidelity", c.values},
              {"stderr", c.std_errors}, {"n_seeds", c.n_seeds}};
}

Json threshold_json(const ThresholdRecord& t) {
  return Json{{"ghz_size", t.ghz_size},
              {"n_shots", t.n_shots},
              {"cut_fidelity", t.cut_fidelity},
              {"status", std::string(to_string(t.status))},
              {"n_add_threshold", optional_number(t.n_add_threshold)},
              {"crossings", t.crossings},
              {"ambiguous", t.ambiguous}};
}

Json plan_json(const LinkPlan& plan) {
  Json steps = Json::array();
  for (const auto& s : plan.steps) {
    steps.push_back(Json{{"gate", s.gate},
                         {"decision", std::string(to_string(s.decision))},
                         {"tentative_shots", s.tentative_shots},
                         {"allocated_shots", s.allocated_shots},
                         {"escalated", s.escalated},
                         {"infeasible", s.infeasible},
                         {"target_unreachable", s.target_unreachable},
                         {"cut_fidelity", s.cut_fidelity},
                         {"remote_fidelity", s.remote_fidelity},
                         {"bell_available", s.bell_available},
                         {"budget_after", s.budget_after}});
  }
  return Json{{"total_budget", plan.total_budget},
              {"spent", plan.spent()},
              {"remaining_budget", plan.remaining_budget},
              {"feasible", plan.feasible()},
              {"steps", std::move(steps)}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

void write_curves_csv(std::ostream& out, const std::vector<metrics::FidelityCurve>& curves) {
  out << kCurveCsvHeader << '\n';
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      out << c.ghz_size << ',' << c.param_name << ',' << format_double(c.grid[i]) << ','
          << format_double(c.values[i]) << ',' << format_double(c.std_errors[i]) << ','
          << c.n_seeds << '\n';
    }
  }
}

std::string summary_json(const ResultBundle& bundle, bool embed_curves) {
  Json root;
  root["command"] = bundle.command;
  Json config = Json::object();
  for (const auto& [key, value] : bundle.config) config[key] = value;
  root["config"] = std::move(config);
  if (!bundle.thresholds.empty()) {
    Json arr = Json::array();
    for (const auto& t : bundle.thresholds) arr.push_back(threshold_json(t));
    root["thresholds"] = std::move(arr);
  }
  if (!bundle.crossovers.empty()) {
    Json arr = Json::array();
    for (const auto& c : bundle.crossovers) {
      arr.push_back(Json{{"ghz_size", c.ghz_size},
                         {"plateau_fidelity", c.plateau_fidelity},
                         {"n_shots", c.n_shots ? Json(*c.n_shots) : Json(nullptr)}});
    }
    root["crossovers"] = std::move(arr);
  }
  if (!bundle.target_shots.empty()) {
    Json arr = Json::array();
    for (const auto& t : bundle.target_shots) {
      arr.push_back(Json{{"ghz_size", t.ghz_size},
                         {"target_fidelity", t.target_fidelity},
                         {"n_shots", optional_number(t.n_shots)}});
    }
    root["target_shots"] = std::move(arr);
  }
  if (bundle.plan) root["plan"] = plan_json(*bundle.plan);
  if (bundle.breakeven_efficiency) root["breakeven_efficiency"] = *bundle.breakeven_efficiency;
  if (embed_curves) {
    Json arr = Json::array();
    for (const auto& c : bundle.curves) arr.push_back(curve_json(c));
    root["curves"] = std::move(arr);
  }
  return root.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit_results(const ResultBundle& bundle,
                                                const std::filesystem::path& dir,
                                                OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  if (format == OutputFormat::kCsv) {
    std::ostringstream csv;
    write_curves_csv(csv, bundle.curves);
    written.push_back(dir / "curves.csv");
    write_file(written.back(), csv.str());
  }
  written.push_back(dir / "summary.json");
  write_file(written.back(), summary_json(bundle, format == OutputFormat::kJson));
  return written;
}

}  // namespace telecut::experiments

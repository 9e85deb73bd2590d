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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "telecut/experiments/breakeven.hpp"
#include "telecut/experiments/compare.hpp"
#include "telecut/experiments/config.hpp"
#include "telecut/experiments/emit.hpp"
#include "telecut/experiments/schedule.hpp"
#include "telecut/experiments/sweep.hpp"

namespace ex = telecut::experiments;

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::optional<int> jobs;
  std::string out_dir = "telecut_out";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--reps", o.reps, "seeds averaged per cut point")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

ex::SweepConfig resolve(const CommonOptions& o) {
  ex::SweepConfig c = o.config_path.empty() ? ex::SweepConfig{} : ex::load_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.reps) c.repetitions = *o.reps;
  if (o.jobs) c.jobs = *o.jobs;
  c.validate();
  return c;
}

void finish(const ex::ResultBundle& bundle, const CommonOptions& o) {
  for (const auto& path :
       ex::emit_results(bundle, o.out_dir, ex::parse_output_format(o.format))) {
    std::printf("wrote %s\n", path.string().c_str());
  }
}

void print_compare(const ex::CompareResult& r) {
  for (const auto& c : r.crossovers) {
    std::printf("ghz %d  plateau %.4f  crossover %s\n", c.ghz_size, c.plateau_fidelity,
                c.n_shots ? std::to_string(*c.n_shots).c_str() : "none");
  }
  for (const auto& t : r.target_shots) {
    if (t.n_shots) {
      std::printf("ghz %d  shots for F=%.3g: %.1f\n", t.ghz_size, t.target_fidelity, *t.n_shots);
    } else {
      std::printf("ghz %d  shots for F=%.3g: not reached\n", t.ghz_size, t.target_fidelity);
    }
  }
  for (const auto& t : r.thresholds) {
    std::printf("ghz %d  N=%llu  F_cut %.4f  n_add %s\n", t.ghz_size,
                static_cast<unsigned long long>(t.n_shots), t.cut_fidelity,
                t.n_add_threshold ? ex::format_double(*t.n_add_threshold).c_str()
                                  : std::string(ex::to_string(t.status)).c_str());
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "no") return false;
  throw std::invalid_argument("bad boolean '" + s + "'");
}

// Header row `remote_fidelity,bell_available`, one row per gate.
std::vector<ex::LinkState> read_links(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  std::getline(in, line);
  const auto header = split_csv_line(line);
  if (header != std::vector<std::string>{"remote_fidelity", "bell_available"}) {
    throw std::invalid_argument("links file must start with remote_fidelity,bell_available");
  }
  std::vector<ex::LinkState> links;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) throw std::invalid_argument("links row needs two columns: " + line);
    links.push_back({std::stod(cells[0]), parse_bool(cells[1])});
  }
  return links;
}

// n_shots rows of one GHZ size from a curves.csv file.
telecut::metrics::FidelityCurve read_cut_curve(const std::string& path, int ghz_size) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  std::getline(in, line);
  if (line != ex::kCurveCsvHeader) throw std::invalid_argument(path + " is not a curves file");
  telecut::metrics::FidelityCurve curve;
  curve.param_name = "n_shots";
  curve.ghz_size = ghz_size;
  while (std::getline(in, line)) {
    const auto cells = split_csv_line(line);
    if (cells.size() != 6) continue;
    if (std::stoi(cells[0]) != ghz_size || cells[1] != "n_shots") continue;
    curve.grid.push_back(std::stod(cells[2]));
    curve.values.push_back(std::stod(cells[3]));
    curve.std_errors.push_back(std::stod(cells[4]));
    curve.n_seeds = std::stoi(cells[5]);
  }
  if (curve.grid.empty()) {
    throw std::invalid_argument(path + " has no n_shots rows for ghz size " +
                                std::to_string(ghz_size));
  }
  curve.validate();
  return curve;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remote gates versus gate cutting for distributed GHZ states"};
  app.require_subcommand(1);

  CommonOptions remote_opts, cut_opts, compare_opts, schedule_opts, breakeven_opts;
  auto* remote = app.add_subcommand("remote-sweep", "remote-gate fidelity over n_add");
  add_common(remote, remote_opts);
  auto* cut = app.add_subcommand("cut-sweep", "cut fidelity over shot count");
  add_common(cut, cut_opts);
  auto* compare = app.add_subcommand("compare", "both sweeps, thresholds and crossovers");
  add_common(compare, compare_opts);

  auto* schedule = app.add_subcommand("schedule", "greedy cut-or-remote plan for a link table");
  add_common(schedule, schedule_opts);
  std::string links_path, cut_curve_path;
  std::uint64_t budget = 0;
  int schedule_size = 2;
  schedule->add_option("--links", links_path, "CSV: remote_fidelity,bell_available")
      ->required()
      ->check(CLI::ExistingFile);
  schedule->add_option("--budget", budget, "total shot budget")->required();
  schedule->add_option("--cut-curve", cut_curve_path, "curves.csv to take the cut model from")
      ->check(CLI::ExistingFile);
  schedule->add_option("--ghz-size", schedule_size, "GHZ size whose cut curve is the model")
      ->check(CLI::Range(2, 5));

  auto* breakeven = app.add_subcommand("breakeven", "transducer efficiency at equal cost");
  add_common(breakeven, breakeven_opts);
  int gates = 1;
  breakeven->add_option("--gates", gates, "number of nonlocal gates")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    ex::ResultBundle bundle;
    if (*remote) {
      const auto config = resolve(remote_opts);
      bundle.command = "remote-sweep";
      bundle.config = ex::config_echo(config);
      bundle.curves = ex::run_remote_sweep(config);
      finish(bundle, remote_opts);
    } else if (*cut) {
      const auto config = resolve(cut_opts);
      bundle.command = "cut-sweep";
      bundle.config = ex::config_echo(config);
      bundle.curves = ex::run_cut_sweep(config);
      finish(bundle, cut_opts);
    } else if (*compare) {
      const auto config = resolve(compare_opts);
      const auto result = ex::run_compare(config);
      print_compare(result);
      bundle.command = "compare";
      bundle.config = ex::config_echo(config);
      bundle.curves = result.remote;
      bundle.curves.insert(bundle.curves.end(), result.cut.begin(), result.cut.end());
      bundle.thresholds = result.thresholds;
      bundle.crossovers = result.crossovers;
      bundle.target_shots = result.target_shots;
      finish(bundle, compare_opts);
    } else if (*schedule) {
      auto config = resolve(schedule_opts);
      telecut::metrics::FidelityCurve model;
      if (!cut_curve_path.empty()) {
        model = read_cut_curve(cut_curve_path, schedule_size);
      } else {
        config.ghz_sizes = {schedule_size};
        model = ex::run_cut_sweep(config).front();
        bundle.curves = {model};
      }
      const auto plan = ex::greedy_schedule(read_links(links_path), budget, model);
      for (const auto& s : plan.steps) {
        std::printf("gate %d  %-6s  shots %llu  budget left %llu%s\n", s.gate,
                    std::string(ex::to_string(s.decision)).c_str(),
                    static_cast<unsigned long long>(s.allocated_shots),
                    static_cast<unsigned long long>(s.budget_after),
                    s.infeasible ? "  (infeasible)" : "");
      }
      bundle.command = "schedule";
      bundle.config = ex::config_echo(config);
      bundle.plan = plan;
      finish(bundle, schedule_opts);
    } else if (*breakeven) {
      const double eta = ex::breakeven_efficiency(gates);
      std::printf("break-even efficiency for %d gate(s): %.12f\n", gates, eta);
      bundle.command = "breakeven";
      bundle.config = {{"gates", std::to_string(gates)}};
      bundle.breakeven_efficiency = eta;
      finish(bundle, breakeven_opts);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

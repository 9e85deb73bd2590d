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

#include "telecut/experiments/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace telecut::experiments {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a non-negative integer: '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return v;
}

// Returns (lo, hi, points) when `value` is logspace(lo, hi, points).
bool parse_logspace(const std::string& value, double& lo, double& hi, int& points) {
  const std::string prefix = "logspace(";
  if (value.rfind(prefix, 0) != 0 || value.back() != ')') return false;
  const auto args = split(value.substr(prefix.size(), value.size() - prefix.size() - 1), ',');
  if (args.size() != 3) {
    throw std::invalid_argument("logspace expects (lo, hi, points)");
  }
  lo = parse_double(args[0]);
  hi = parse_double(args[1]);
  points = parse_int(args[2]);
  return true;
}

std::vector<double> parse_double_grid(const std::string& value) {
  double lo = 0, hi = 0;
  int points = 0;
  if (parse_logspace(value, lo, hi, points)) return log_space(lo, hi, points);
  std::vector<double> out;
  for (const auto& item : split(value, ',')) out.push_back(parse_double(item));
  return out;
}

std::vector<std::uint64_t> parse_u64_grid(const std::string& value) {
  double lo = 0, hi = 0;
  int points = 0;
  if (parse_logspace(value, lo, hi, points)) return log_space_integers(lo, hi, points);
  std::vector<std::uint64_t> out;
  for (const auto& item : split(value, ',')) out.push_back(parse_u64(item));
  return out;
}

template <typename T>
std::string join(const std::vector<T>& v, const std::function<std::string(const T&)>& f) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += f(v[i]);
  }
  return out;
}

using Setter = std::function<void(SweepConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"ghz_sizes",
       [](SweepConfig& c, const std::string& v) {
         c.ghz_sizes.clear();
         for (const auto& item : split(v, ',')) c.ghz_sizes.push_back(parse_int(item));
       }},
      {"n_add_grid", [](SweepConfig& c, const std::string& v) { c.n_add_grid = parse_double_grid(v); }},
      {"n_shots_grid",
       [](SweepConfig& c, const std::string& v) { c.n_shots_grid = parse_u64_grid(v); }},
      {"threshold_budgets",
       [](SweepConfig& c, const std::string& v) { c.threshold_budgets = parse_u64_grid(v); }},
      {"eta", [](SweepConfig& c, const std::string& v) { c.transducer.eta = parse_double(v); }},
      {"bandwidth_hz",
       [](SweepConfig& c, const std::string& v) { c.transducer.bandwidth_hz = parse_double(v); }},
      {"op_time_s",
       [](SweepConfig& c, const std::string& v) { c.transducer.op_time_s = parse_double(v); }},
      {"p_e", [](SweepConfig& c, const std::string& v) { c.transducer.p_e = parse_double(v); }},
      {"fidelity_1q",
       [](SweepConfig& c, const std::string& v) { c.local.one_qubit.gate_fidelity = parse_double(v); }},
      {"fidelity_2q",
       [](SweepConfig& c, const std::string& v) { c.local.two_qubit.gate_fidelity = parse_double(v); }},
      {"fidelity_convention",
       [](SweepConfig& c, const std::string& v) {
         c.local.convention = noise::parse_fidelity_convention(v);
       }},
      {"noise_profile",
       [](SweepConfig& c, const std::string& v) { c.profile = noise::parse_noise_profile(v); }},
      {"cut_sampling",
       [](SweepConfig& c, const std::string& v) { c.sampling = cutting::parse_sampling_mode(v); }},
      {"seed", [](SweepConfig& c, const std::string& v) { c.seed = parse_u64(v); }},
      {"repetitions", [](SweepConfig& c, const std::string& v) { c.repetitions = parse_int(v); }},
      {"jobs", [](SweepConfig& c, const std::string& v) { c.jobs = parse_int(v); }},
      {"remote_shots", [](SweepConfig& c, const std::string& v) { c.remote_shots = parse_u64(v); }},
      {"plateau_max_n_add",
       [](SweepConfig& c, const std::string& v) { c.plateau_max_n_add = parse_double(v); }},
      {"target_fidelity",
       [](SweepConfig& c, const std::string& v) { c.target_fidelity = parse_double(v); }},
  };
  return table;
}

}  // namespace

SweepConfig::SweepConfig()
    : n_add_grid(log_space(1e-4, 1.0, 30)), n_shots_grid(log_space_integers(10.0, 1e4, 25)) {}

void SweepConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("config: " + what); };
  if (ghz_sizes.empty()) fail("ghz_sizes is empty");
  for (std::size_t i = 0; i < ghz_sizes.size(); ++i) {
    if (ghz_sizes[i] < 2 || ghz_sizes[i] > 5) fail("ghz_sizes entries must lie in [2, 5]");
    if (i && ghz_sizes[i] <= ghz_sizes[i - 1]) fail("ghz_sizes must be ascending");
  }
  if (n_add_grid.empty()) fail("n_add_grid is empty");
  for (std::size_t i = 0; i < n_add_grid.size(); ++i) {
    if (!(n_add_grid[i] > 0.0)) fail("n_add_grid entries must be positive");
    if (i && !(n_add_grid[i] > n_add_grid[i - 1])) fail("n_add_grid must be ascending");
  }
  if (n_shots_grid.empty()) fail("n_shots_grid is empty");
  for (std::size_t i = 0; i < n_shots_grid.size(); ++i) {
    if (n_shots_grid[i] == 0) fail("n_shots_grid entries must be positive");
    if (i && n_shots_grid[i] <= n_shots_grid[i - 1]) fail("n_shots_grid must be ascending");
  }
  for (std::size_t i = 0; i < threshold_budgets.size(); ++i) {
    if (threshold_budgets[i] == 0) fail("threshold_budgets entries must be positive");
    if (i && threshold_budgets[i] <= threshold_budgets[i - 1]) {
      fail("threshold_budgets must be ascending");
    }
  }
  noise::TransducerParams t = transducer;
  t.validate();
  local.validate();
  if (repetitions < 1) fail("repetitions must be >= 1");
  if (jobs < 1) fail("jobs must be >= 1");
  if (!(plateau_max_n_add > 0.0)) fail("plateau_max_n_add must be positive");
  if (!(target_fidelity > 0.0 && target_fidelity <= 1.0)) fail("target_fidelity must lie in (0, 1]");
}

SweepConfig parse_config(std::string_view text, SweepConfig base) {
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
    if (!seen.insert(key).second) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": repeated key '" +
                                  key + "'");
    }
    try {
      it->second(base, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + " (" + key +
                                  "): " + e.what());
    }
  }
  base.validate();
  return base;
}

SweepConfig load_config(const std::filesystem::path& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read config file " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw std::runtime_error("number formatting failed");
  }
  return std::string(buf, ptr);
}

std::vector<std::pair<std::string, std::string>> config_echo(const SweepConfig& c) {
  const std::function<std::string(const double&)> fd = [](const double& v) { return format_double(v); };
  const std::function<std::string(const std::uint64_t&)> fu = [](const std::uint64_t& v) {
    return std::to_string(v);
  };
  const std::function<std::string(const int&)> fi = [](const int& v) { return std::to_string(v); };
  return {
      {"ghz_sizes", join(c.ghz_sizes, fi)},
      {"n_add_grid", join(c.n_add_grid, fd)},
      {"n_shots_grid", join(c.n_shots_grid, fu)},
      {"threshold_budgets", join(c.threshold_budgets, fu)},
      {"eta", format_double(c.transducer.eta)},
      {"bandwidth_hz", format_double(c.transducer.bandwidth_hz)},
      {"op_time_s", format_double(c.transducer.op_time_s)},
      {"p_e", format_double(c.transducer.p_e)},
      {"fidelity_1q", format_double(c.local.one_qubit.gate_fidelity)},
      {"fidelity_2q", format_double(c.local.two_qubit.gate_fidelity)},
      {"fidelity_convention", std::string(noise::to_string(c.local.convention))},
      {"noise_profile", std::string(noise::to_string(c.profile))},
      {"cut_sampling", std::string(cutting::to_string(c.sampling))},
      {"seed", std::to_string(c.seed)},
      {"repetitions", std::to_string(c.repetitions)},
      {"jobs", std::to_string(c.jobs)},
      {"remote_shots", std::to_string(c.remote_shots)},
      {"plateau_max_n_add", format_double(c.plateau_max_n_add)},
      {"target_fidelity", format_double(c.target_fidelity)},
  };
}

std::vector<double> log_space(double lo, double hi, int points) {
  if (!(lo > 0.0 && hi >= lo) || points < 1) {
    throw std::invalid_argument("logspace needs 0 < lo <= hi and points >= 1");
  }
  if (points == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(points));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (points - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<std::uint64_t> log_space_integers(double lo, double hi, int points) {
  std::vector<std::uint64_t> out;
  for (double v : log_space(lo, hi, points)) {
    const auto r = static_cast<std::uint64_t>(std::llround(v));
    if (r == 0) continue;
    if (out.empty() || r > out.back()) out.push_back(r);
  }
  return out;
}

}  // namespace telecut::experiments

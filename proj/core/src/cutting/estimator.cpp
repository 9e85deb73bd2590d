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

#include "telecut/cutting/estimator.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "telecut/cutting/subexperiment.hpp"
#include "telecut/qsim/gate.hpp"

namespace telecut::cutting {
namespace {

using Transfer = Eigen::Matrix4cd;
using OpVec = Eigen::Vector4cd;  // column-major vec of a 2x2 operator

// Linear map r -> Tr_a[(I (x) Z_a) C(r (x) |0><0|_a)] for one cut side, or
// r -> C(r) when the selection needs no ancilla.
Transfer side_transfer(const TermSelection& sel, const PauliCutDecomposition& dec, CutSide side,
                       const noise::LocalNoise& local, noise::NoiseProfile profile) {
  const bool ancilla = !sel.diagonal();
  Circuit c(ancilla ? 2 : 1);
  append_cut_side(c, 0, ancilla ? 1 : -1, sel, dec, side, local, profile);
  Transfer t;
  for (int b = 0; b < 4; ++b) {
    Matrix e = Matrix::Zero(2, 2);
    e(b % 2, b / 2) = 1.0;
    Matrix r(2, 2);
    if (ancilla) {
      Matrix zero = Matrix::Zero(2, 2);
      zero(0, 0) = 1.0;
      const Matrix out = c.evolve(gates::kron(e, zero));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          r(i, j) = out(2 * i, 2 * j) - out(2 * i + 1, 2 * j + 1);
        }
      }
    } else {
      r = c.evolve(e);
    }
    t.col(b) << r(0, 0), r(1, 0), r(0, 1), r(1, 1);
  }
  return t;
}

double z_mean(const OpVec& v, int bit) {
  return bit ? (v(0) - v(3)).real() : (v(0) + v(3)).real();
}

std::uint64_t binomial(Rng& rng, std::uint64_t trials, double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<std::uint64_t> draw(trials, p);
  return draw(rng);
}

}  // namespace

SamplingMode parse_sampling_mode(std::string_view text) {
  if (text == "per-shot") return SamplingMode::kPerShot;
  if (text == "per-subexperiment") return SamplingMode::kPerSubexperiment;
  throw std::invalid_argument("unknown sampling mode '" + std::string(text) +
                              "' (expected per-shot|per-subexperiment)");
}

std::string_view to_string(SamplingMode mode) {
  return mode == SamplingMode::kPerShot ? "per-shot" : "per-subexperiment";
}

CutEstimator::CutEstimator(int ghz_size, const noise::LocalNoise& local,
                           noise::NoiseProfile profile, PauliCutDecomposition decomposition)
    : ghz_size_(ghz_size), sampler_(std::move(decomposition)) {
  if (ghz_size < 2 || ghz_size - 1 > kMaxCuts) {
    throw std::invalid_argument("cut estimator supports GHZ sizes 2.." +
                                std::to_string(kMaxCuts + 1) + ", got " +
                                std::to_string(ghz_size));
  }
  local.validate();
  n_outcomes_ = sampler_.size();
  n_configs_ = 1;
  for (int c = 0; c < n_cuts(); ++c) {
    n_configs_ *= n_outcomes_;
  }
  build_tables(local, profile);
  build_groups();
}

void CutEstimator::build_tables(const noise::LocalNoise& local, noise::NoiseProfile profile) {
  const auto& dec = sampler_.decomposition();
  const auto outcomes = sampler_.outcomes();
  std::vector<Transfer> control(n_outcomes_);
  peripheral_.assign(2 * n_outcomes_, 0.0);
  outcome_weight_.resize(n_outcomes_);
  outcome_mass_.resize(n_outcomes_);
  const OpVec ground(1.0, 0.0, 0.0, 0.0);
  for (std::size_t o = 0; o < n_outcomes_; ++o) {
    control[o] = side_transfer(outcomes[o], dec, CutSide::kControl, local, profile);
    const OpVec tgt = side_transfer(outcomes[o], dec, CutSide::kTarget, local, profile) * ground;
    peripheral_[2 * o] = z_mean(tgt, 0);
    peripheral_[2 * o + 1] = z_mean(tgt, 1);
    outcome_weight_[o] = sampler_.weight(outcomes[o]);
    outcome_mass_[o] = sampler_.signed_mass(outcomes[o]);
  }

  Circuit preamble(1);
  append_ghz_preamble(preamble, 0, local);
  Matrix zero = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  const Matrix r0 = preamble.evolve(zero);

  // Breadth-first over cut prefixes; cut 1 is the most significant digit.
  std::vector<OpVec> level = {OpVec(r0(0, 0), r0(1, 0), r0(0, 1), r0(1, 1))};
  for (int c = 0; c + 1 < n_cuts(); ++c) {
    std::vector<OpVec> next(level.size() * n_outcomes_);
    for (std::size_t p = 0; p < level.size(); ++p) {
      for (std::size_t o = 0; o < n_outcomes_; ++o) {
        next[p * n_outcomes_ + o] = control[o] * level[p];
      }
    }
    level = std::move(next);
  }
  central_.assign(2 * n_configs_, 0.0);
  for (std::size_t p = 0; p < level.size(); ++p) {
    for (std::size_t o = 0; o < n_outcomes_; ++o) {
      const OpVec leaf = control[o] * level[p];
      const std::size_t g = p * n_outcomes_ + o;
      central_[2 * g] = z_mean(leaf, 0);
      central_[2 * g + 1] = z_mean(leaf, 1);
    }
  }
}

void CutEstimator::build_groups() {
  const std::size_t n_obs = n_observables();
  const int cuts = n_cuts();
  using Key = std::pair<long long, long long>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<long long>()(k.first * 1000003LL) ^ std::hash<long long>()(k.second);
    }
  };
  std::vector<std::unordered_map<Key, std::size_t, KeyHash>> index(n_obs);
  groups_.assign(n_obs, {});
  std::vector<std::size_t> digits(static_cast<std::size_t>(cuts));
  for (std::size_t g = 0; g < n_configs_; ++g) {
    std::size_t rest = g;
    double mass = 1.0;
    for (int c = cuts - 1; c >= 0; --c) {
      digits[static_cast<std::size_t>(c)] = rest % n_outcomes_;
      rest /= n_outcomes_;
      mass *= outcome_mass_[digits[static_cast<std::size_t>(c)]];
    }
    const double sign = mass < 0.0 ? -1.0 : 1.0;
    const double abs_mass = std::abs(mass);
    for (std::size_t s = 0; s < n_obs; ++s) {
      const auto obs = static_cast<std::uint32_t>(s);
      double mu = central_[2 * g + static_cast<std::size_t>(observable_bit(obs, 0))];
      for (int c = 0; c < cuts; ++c) {
        mu *= peripheral_[2 * digits[static_cast<std::size_t>(c)] +
                          static_cast<std::size_t>(observable_bit(obs, c + 1))];
      }
      const double nu = sign * mu;
      const Key key{std::llround(abs_mass * 1e15), std::llround(nu * 1e12)};
      auto [it, inserted] = index[s].try_emplace(key, groups_[s].size());
      if (inserted) {
        groups_[s].push_back(Group{abs_mass, nu, 0});
      }
      ++groups_[s][it->second].members;
    }
  }
}

std::vector<TermSelection> CutEstimator::config(std::size_t index) const {
  if (index >= n_configs_) {
    throw std::out_of_range("configuration index out of range");
  }
  std::vector<TermSelection> out(static_cast<std::size_t>(n_cuts()));
  for (int c = n_cuts() - 1; c >= 0; --c) {
    out[static_cast<std::size_t>(c)] = sampler_.outcomes()[index % n_outcomes_];
    index /= n_outcomes_;
  }
  return out;
}

std::size_t CutEstimator::config_index(const std::vector<TermSelection>& selections) const {
  if (static_cast<int>(selections.size()) != n_cuts()) {
    throw std::invalid_argument("expected one selection per cut");
  }
  std::size_t g = 0;
  const auto outcomes = sampler_.outcomes();
  for (const TermSelection& sel : selections) {
    std::size_t o = 0;
    while (o < outcomes.size() && !(outcomes[o] == sel)) ++o;
    if (o == outcomes.size()) {
      throw std::invalid_argument("inadmissible term selection");
    }
    g = g * n_outcomes_ + o;
  }
  return g;
}

double CutEstimator::product_mean(std::size_t config, std::uint32_t observable) const {
  if (config >= n_configs_ || observable >= n_observables()) {
    throw std::out_of_range("configuration or observable out of range");
  }
  double mu = central_[2 * config + static_cast<std::size_t>(observable_bit(observable, 0))];
  for (int c = n_cuts() - 1; c >= 0; --c) {
    const std::size_t o = config % n_outcomes_;
    config /= n_outcomes_;
    mu *= peripheral_[2 * o + static_cast<std::size_t>(observable_bit(observable, c + 1))];
  }
  return mu;
}

double CutEstimator::config_weight(std::size_t config) const {
  double w = 1.0;
  for (int c = 0; c < n_cuts(); ++c) {
    w *= outcome_weight_[config % n_outcomes_];
    config /= n_outcomes_;
  }
  return w;
}

double CutEstimator::config_probability(std::size_t config) const {
  double p = 1.0;
  const auto pmf = sampler_.pmf();
  for (int c = 0; c < n_cuts(); ++c) {
    p *= pmf[config % n_outcomes_];
    config /= n_outcomes_;
  }
  return p;
}

std::vector<double> CutEstimator::estimator_means() const {
  std::vector<double> out(n_observables(), 0.0);
  for (std::size_t s = 0; s < out.size(); ++s) {
    double acc = 0.0;
    for (const Group& g : groups_[s]) {
      acc += g.mass * g.nu * static_cast<double>(g.members);
    }
    out[s] = acc;
  }
  return out;
}

std::vector<double> CutEstimator::sample_expectations(std::uint64_t n_shots, Seed seed,
                                                      SamplingMode mode) const {
  if (n_shots == 0) {
    throw std::invalid_argument("n_shots must be positive");
  }
  Rng rng = make_rng(seed);
  std::vector<double> out(n_observables(), 0.0);
  const double n = static_cast<double>(n_shots);
  if (mode == SamplingMode::kPerSubexperiment) {
    for (std::size_t s = 0; s < out.size(); ++s) {
      double acc = 0.0;
      for (const Group& g : groups_[s]) {
        const std::uint64_t k = binomial(rng, g.members * n_shots, 0.5 * (1.0 + g.nu));
        acc += g.mass * (2.0 * static_cast<double>(k) / n - static_cast<double>(g.members));
      }
      out[s] = acc;
    }
    return out;
  }
  const auto cuts = static_cast<std::size_t>(n_cuts());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto obs = static_cast<std::uint32_t>(s);
    double acc = 0.0;
    for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
      std::size_t g = 0;
      for (std::size_t c = 0; c < cuts; ++c) {
        g = g * n_outcomes_ + sampler_.sample_index(rng);
      }
      const double mu = product_mean(g, obs);
      const double u = std::generate_canonical<double, 53>(rng);
      const double outcome = u < 0.5 * (1.0 + mu) ? 1.0 : -1.0;
      acc += config_weight(g) * outcome;
    }
    out[s] = acc / n;
  }
  return out;
}

ReconstructionResult CutEstimator::sample(std::uint64_t n_shots, Seed seed,
                                          SamplingMode mode) const {
  const std::vector<double> e = sample_expectations(n_shots, seed, mode);
  return reconstruct_distribution(e, n_shots);
}

ReconstructionResult sample_cut_estimate(int ghz_size, std::uint64_t n_shots,
                                         const noise::LocalNoise& local, Seed seed,
                                         SamplingMode mode, noise::NoiseProfile profile) {
  return CutEstimator(ghz_size, local, profile).sample(n_shots, seed, mode);
}

}  // namespace telecut::cutting

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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "telecut/cutting/decomposition.hpp"
#include "telecut/cutting/estimator.hpp"
#include "telecut/cutting/exact.hpp"
#include "telecut/cutting/qpd_sampler.hpp"
#include "telecut/cutting/reconstruction.hpp"
#include "telecut/cutting/subexperiment.hpp"
#include "telecut/qsim/gate.hpp"
#include "telecut/qsim/outcome.hpp"

namespace telecut::cutting {
namespace {

namespace o = oracle;
using noise::LocalNoise;
using noise::NoiseProfile;

// Standard one-qubit errors with perfect two-qubit gates: the noise the cut
// arm sees under the physical profile.
LocalNoise one_qubit_only() {
  LocalNoise l = LocalNoise::standard();
  l.two_qubit.gate_fidelity = 1.0;
  return l;
}

TEST(Decomposition, ReassemblesCnot) {
  const auto d = cnot_decomposition();
  EXPECT_LT(max_abs_diff(d.reassemble(), gates::cnot()), 1e-12);
  ASSERT_EQ(d.size(), 4u);
  for (const auto& t : d.terms()) EXPECT_DOUBLE_EQ(std::abs(t.coefficient), 0.5);
}

TEST(Decomposition, NormsAndCost) {
  const auto d = cnot_decomposition();
  EXPECT_DOUBLE_EQ(d.l1_norm(), 2.0);
  EXPECT_DOUBLE_EQ(d.l2_norm_squared(), 1.0);
  EXPECT_DOUBLE_EQ(d.sampling_cost(), 7.0);
}

TEST(QpdSampler, UniformOverAdmissibleTriples) {
  const QpdSampler s(cnot_decomposition());
  EXPECT_EQ(s.size(), 28u);
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_NEAR(s.pmf()[i], 1.0 / 28.0, 1e-15);
    total += s.pmf()[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(s.probability({1, 1, 1}), 0.0);
  EXPECT_DOUBLE_EQ(s.cost(), 7.0);
}

TEST(QpdSampler, SignedMassesSumToCoefficientProducts) {
  const QpdSampler s(cnot_decomposition());
  const auto& d = s.decomposition();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double re = 0.0;
      for (const auto& sel : s.outcomes()) {
        if (sel.i == i && sel.j == j && sel.k == 0) re += s.signed_mass(sel);
      }
      EXPECT_NEAR(re, d[i].coefficient * d[j].coefficient, 1e-15);
    }
  }
}

TEST(QpdSampler, EmpiricalFrequencies) {
  const QpdSampler s(cnot_decomposition());
  Rng rng(5);
  std::vector<int> hits(s.size(), 0);
  const int draws = 280000;
  for (int t = 0; t < draws; ++t) ++hits[s.sample_index(rng)];
  for (int h : hits) EXPECT_NEAR(h, draws / 28.0, 5 * std::sqrt(draws / 28.0));
}

TEST(Exact, TwoQubitNoiseless) {
  const auto e = exact_cut_expectations(2, LocalNoise::ideal());
  EXPECT_NEAR(e[0], 1.0, 1e-14);  // II
  EXPECT_NEAR(e[1], 0.0, 1e-14);  // IZ
  EXPECT_NEAR(e[2], 0.0, 1e-14);  // ZI
  EXPECT_NEAR(e[3], 1.0, 1e-14);  // ZZ
}

TEST(Exact, ThreeQubitNoiselessReconstructsGhz) {
  const auto r = reconstruct_distribution(exact_cut_expectations(3, LocalNoise::ideal()), 1000);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(r.probabilities[i], (i == 0 || i == 7) ? 0.5 : 0.0, 1e-10);
  }
}

TEST(Exact, MatchesUncutForAllSizes) {
  for (const auto& local : {LocalNoise::ideal(), LocalNoise::standard()}) {
    for (int n = 2; n <= 5; ++n) {
      const auto cut = exact_cut_expectations(n, local);
      const auto uncut = uncut_expectations(n, local);
      for (std::size_t s = 0; s < cut.size(); ++s) EXPECT_NEAR(cut[s], uncut[s], 1e-8);
    }
  }
}

TEST(Exact, UncutMatchesEmbeddedOracle) {
  const int n = 4;
  const double p1 = o::pauli_p(0.99, 1), p2 = o::pauli_p(0.98, 2);
  Matrix rho = Matrix::Zero(16, 16);
  rho(0, 0) = 1;
  rho = o::depolarize(o::conj_by(o::embed(o::h(), {0}, n), rho), p1, {0}, n);
  for (int q = 1; q < n; ++q) {
    rho = o::depolarize(o::conj_by(o::embed(o::cnot(), {0, q}, n), rho), p2, {0, q}, n);
  }
  const auto lib = uncut_expectations(n, LocalNoise::standard());
  const auto ref = o::z_strings(rho, n);
  for (std::size_t s = 0; s < ref.size(); ++s) EXPECT_NEAR(lib[s], ref[s], 1e-12);
}

TEST(Subexperiment, DiagonalSelectionHasNoAncillas) {
  const QpdSampler s(cnot_decomposition());
  const std::vector<TermSelection> sel{{2, 2, 0}};
  const auto ex = build_subexperiment(2, sel, s, LocalNoise::ideal(), NoiseProfile::kPhysical);
  ASSERT_EQ(ex.modules.size(), 2u);
  EXPECT_TRUE(ex.modules[0].ancillas.empty());
  EXPECT_TRUE(ex.modules[1].ancillas.empty());
}

TEST(Subexperiment, OffDiagonalUsesAncillaBases) {
  const QpdSampler s(cnot_decomposition());
  const std::vector<TermSelection> sel{{0, 3, 1}, {1, 2, 0}};
  const auto ex = build_subexperiment(3, sel, s, LocalNoise::ideal(), NoiseProfile::kPhysical);
  EXPECT_EQ(ex.modules[0].ancillas.size(), 2u);
  EXPECT_EQ(ex.modules[0].bases[0], AncillaBasis::kY);
  EXPECT_EQ(ex.modules[0].bases[1], AncillaBasis::kX);
  EXPECT_DOUBLE_EQ(ex.weight, -7.0 * 7.0);
  const std::vector<TermSelection> bad{{1, 1, 1}};
  EXPECT_THROW(build_subexperiment(2, bad, s, LocalNoise::ideal(), NoiseProfile::kPhysical),
               std::invalid_argument);
}

TEST(Subexperiment, HadamardTestReadsOverlaps) {
  // Target side of selection (0, 1, 0) is the (I, X) test; on |+> the
  // ancilla reads Re<+|X|+> = 1.
  const QpdSampler s(cnot_decomposition());
  Circuit c(2);
  c.add(gates::H(0));
  append_cut_side(c, 0, 1, {0, 1, 0}, s.decomposition(), CutSide::kTarget, LocalNoise::ideal(),
                  NoiseProfile::kPhysical);
  const auto p = basis_probabilities(c.run(DensityMatrix::zero_state(2)));
  EXPECT_NEAR((p[0] + p[2]) - (p[1] + p[3]), 1.0, 1e-12);
}

// The estimator's per-module transfer maps agree with assembling and
// simulating each subexperiment directly.
void expect_dual_route(int n, const LocalNoise& local, NoiseProfile profile, int samples,
                       std::uint64_t seed) {
  const CutEstimator est(n, local, profile);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, est.n_configs() - 1);
  for (int t = 0; t < samples; ++t) {
    const std::size_t cfg = t == 0 ? 0 : pick(rng);
    const auto sel = est.config(cfg);
    EXPECT_EQ(est.config_index(sel), cfg);
    const auto ex = build_subexperiment(n, sel, est.sampler(), local, profile);
    EXPECT_NEAR(est.config_weight(cfg), ex.weight, 1e-12);
    for (std::uint32_t s = 0; s < est.n_observables(); ++s) {
      EXPECT_NEAR(est.product_mean(cfg, s), product_mean(ex, s), 1e-12)
          << "n " << n << " config " << cfg << " observable " << s;
    }
  }
}

TEST(CutEstimator, DualRouteTwoQubitsExhaustive) {
  for (auto profile : {NoiseProfile::kPhysical, NoiseProfile::kEveryGate}) {
    const CutEstimator est(2, LocalNoise::standard(), profile);
    for (std::size_t cfg = 0; cfg < est.n_configs(); ++cfg) {
      const auto ex = build_subexperiment(2, est.config(cfg), est.sampler(),
                                          LocalNoise::standard(), profile);
      for (std::uint32_t s = 0; s < 4; ++s) {
        EXPECT_NEAR(est.product_mean(cfg, s), product_mean(ex, s), 1e-12);
      }
    }
  }
}

TEST(CutEstimator, DualRouteLargerSizes) {
  expect_dual_route(3, LocalNoise::standard(), NoiseProfile::kPhysical, 40, 1);
  expect_dual_route(3, LocalNoise::standard(), NoiseProfile::kEveryGate, 40, 2);
  expect_dual_route(4, LocalNoise::standard(), NoiseProfile::kEveryGate, 15, 3);
  expect_dual_route(5, LocalNoise::standard(), NoiseProfile::kPhysical, 8, 4);
}

TEST(CutEstimator, MeansEqualExactOracle) {
  for (int n = 2; n <= 5; ++n) {
    const auto means = CutEstimator(n, LocalNoise::ideal()).estimator_means();
    const auto exact = exact_cut_expectations(n, LocalNoise::ideal());
    for (std::size_t s = 0; s < means.size(); ++s) EXPECT_NEAR(means[s], exact[s], 1e-10);
    // Physical profile: only the central Hadamard pays inside the cut arm.
    const auto noisy = CutEstimator(n, LocalNoise::standard()).estimator_means();
    const auto noisy_exact = exact_cut_expectations(n, one_qubit_only());
    for (std::size_t s = 0; s < noisy.size(); ++s) EXPECT_NEAR(noisy[s], noisy_exact[s], 1e-10);
  }
}

TEST(CutEstimator, ConfigProbabilitiesSumToOne) {
  const CutEstimator est(3, LocalNoise::ideal());
  double total = 0.0;
  for (std::size_t c = 0; c < est.n_configs(); ++c) total += est.config_probability(c);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(CutEstimator, SingleShotBoundedByCost) {
  for (int n = 2; n <= 4; ++n) {
    const CutEstimator est(n, LocalNoise::standard());
    for (Seed seed = 0; seed < 20; ++seed) {
      for (double e : est.sample_expectations(1, seed, SamplingMode::kPerShot)) {
        EXPECT_LE(std::abs(e), std::pow(7.0, n - 1) + 1e-9);
      }
    }
  }
}

TEST(CutEstimator, SeedReproducible) {
  for (auto mode : {SamplingMode::kPerShot, SamplingMode::kPerSubexperiment}) {
    const auto a = sample_cut_estimate(3, 500, LocalNoise::standard(), 99, mode);
    const auto b = sample_cut_estimate(3, 500, LocalNoise::standard(), 99, mode);
    EXPECT_EQ(a.expectations, b.expectations);
    EXPECT_EQ(a.counts, b.counts);
    const auto c = sample_cut_estimate(3, 500, LocalNoise::standard(), 100, mode);
    EXPECT_NE(a.expectations, c.expectations);
  }
}

TEST(CutEstimator, LargeShotCountConvergesNoiseless) {
  const CutEstimator est(2, LocalNoise::ideal());
  const std::uint64_t shots = 1000000;
  const auto e = est.sample_expectations(shots, 12, SamplingMode::kPerShot);
  // Per-shot values are +-7, so the standard error is below 7/sqrt(N).
  // The identity string is estimated too; it is unbiased but not exact.
  for (std::size_t s : {0u, 3u}) {
    EXPECT_NEAR(e[s], 1.0, 3 * 7.0 / std::sqrt(static_cast<double>(shots))) << s;
  }
}

TEST(CutEstimator, StratifiedUnbiased) {
  const CutEstimator est(2, LocalNoise::standard());
  const auto exact = est.estimator_means();
  const int runs = 200;
  std::vector<double> sum(4, 0.0), sq(4, 0.0);
  for (int r = 0; r < runs; ++r) {
    const auto e = est.sample_expectations(200, derive_seed(3, {static_cast<std::uint64_t>(r)}),
                                           SamplingMode::kPerSubexperiment);
    for (int s = 0; s < 4; ++s) {
      sum[s] += e[s];
      sq[s] += e[s] * e[s];
    }
  }
  for (int s = 1; s < 4; ++s) {
    const double mean = sum[s] / runs;
    const double sd = std::sqrt((sq[s] - runs * mean * mean) / (runs - 1));
    EXPECT_LT(std::abs(mean - exact[s]), 4 * sd / std::sqrt(runs) + 1e-12) << s;
  }
}

TEST(CutEstimator, RejectsTooManyCuts) {
  EXPECT_THROW(CutEstimator(6, LocalNoise::ideal()), std::invalid_argument);
  EXPECT_THROW(CutEstimator(1, LocalNoise::ideal()), std::invalid_argument);
}

TEST(Reconstruction, AllOnesIsZeroState) {
  const std::vector<double> e{1, 1, 1, 1};
  const auto p = walsh_hadamard_probabilities(e);
  EXPECT_EQ(p, (std::vector<double>{1, 0, 0, 0}));
}

TEST(Reconstruction, GhzTwo) {
  const std::vector<double> e{1, 0, 0, 1};
  const auto r = reconstruct_distribution(e, 10);
  EXPECT_EQ(r.probabilities, (std::vector<double>{0.5, 0, 0, 0.5}));
  EXPECT_EQ(r.counts, (std::vector<std::uint64_t>{5, 0, 0, 5}));
  EXPECT_FALSE(r.clamped);
}

TEST(Reconstruction, RoundTripRandomDistributions) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 5; ++n) {
    std::vector<double> p(std::size_t{1} << n);
    double total = 0.0;
    for (auto& v : p) total += (v = u(rng));
    for (auto& v : p) v /= total;
    const auto back = walsh_hadamard_probabilities(z_string_expectations(p));
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(back[i], p[i], 1e-15);
  }
}

TEST(Reconstruction, ClampsAndRenormalizes) {
  const std::vector<double> e{1.0, 0.3, -0.2, 1.4};
  const auto r = reconstruct_distribution(e, 1001);
  EXPECT_TRUE(r.clamped);
  double total = 0.0;
  for (double v : r.probabilities) {
    EXPECT_GE(v, 0.0);
    total += v;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  std::uint64_t count = 0;
  for (auto c : r.counts) count += c;
  EXPECT_EQ(count, 1001u);
}

TEST(Reconstruction, RejectsNonPowerOfTwo) {
  const std::vector<double> e{1, 0, 0};
  EXPECT_THROW(reconstruct_distribution(e, 10), std::invalid_argument);
}

TEST(Reconstruction, LargestRemainderTiesToLowerIndex) {
  const std::vector<double> p{1.0 / 3, 1.0 / 3, 1.0 / 3};
  EXPECT_EQ(largest_remainder_counts(p, 2), (std::vector<std::uint64_t>{1, 1, 0}));
}

}  // namespace
}  // namespace telecut::cutting

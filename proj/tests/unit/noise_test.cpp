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

#include <random>

#include "oracles.hpp"
#include "telecut/noise/depolarizing.hpp"
#include "telecut/noise/local_noise.hpp"
#include "telecut/noise/replacement.hpp"
#include "telecut/noise/transducer.hpp"
#include "telecut/qsim/gate.hpp"
#include "telecut/qsim/kraus.hpp"
#include "telecut/qsim/outcome.hpp"

namespace telecut::noise {
namespace {

namespace o = oracle;

TransducerParams with_n_add(double n_add) {
  TransducerParams p;
  p.n_add = n_add;
  return p;
}

TEST(DarkCount, ZeroNoiseOrZeroTime) {
  EXPECT_EQ(dark_count_probability(with_n_add(0.0)), 0.0);
  auto p = with_n_add(0.3);
  p.op_time_s = 0.0;
  EXPECT_EQ(dark_count_probability(p), 0.0);
}

TEST(DarkCount, DefaultsAtPointOne) {
  // eta * B * n_add * T / 2 = 0.5 * 1e7 * 0.1 * 1e-6 / 2 = 0.25
  const double root = 1.0 - std::exp(-0.25);
  EXPECT_NEAR(dark_count_probability(with_n_add(0.1)), root * root, 1e-15);
  EXPECT_NEAR(dark_count_probability(with_n_add(0.1)), 4.8929e-2, 1e-6);
}

TEST(Transducer, RejectsOutOfRange) {
  auto p = with_n_add(-1.0);
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = with_n_add(0.1);
  p.eta = 1.5;
  EXPECT_THROW(bell_density_matrix(p), std::invalid_argument);
}

TEST(BellState, IdealLinkIsPsiPlus) {
  const auto s = bell_density_matrix(with_n_add(0.0));
  const Vector psi = psi_plus_vector();
  EXPECT_LT(max_abs_diff(s.sigma.matrix(), psi * psi.adjoint()), 1e-10);
}

TEST(BellState, MatchesClosedFormOracle) {
  for (double n_add : {1e-4, 1e-2, 0.1, 0.5, 1.0}) {
    const auto s = bell_density_matrix(with_n_add(n_add));
    EXPECT_LT(max_abs_diff(s.sigma.matrix(), o::pair_state(n_add)), 1e-13) << n_add;
  }
}

TEST(BellState, DiagonalAtPointOneMatchesOracle) {
  const auto p = basis_probabilities(bell_density_matrix(with_n_add(0.1)).sigma).probabilities();
  const Matrix ref = o::pair_state(0.1);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(p[i], ref(i, i).real(), 1e-14);
}

TEST(BellState, ValidOnGridAndTraceOne) {
  for (double n_add : {0.0, 1e-4, 1e-3, 1e-2, 1e-1, 0.3, 1.0}) {
    const auto s = bell_density_matrix(with_n_add(n_add));
    EXPECT_NO_THROW(s.sigma.check());
    EXPECT_NEAR(s.sigma.trace().real(), 1.0, 1e-12);
  }
}

TEST(BellState, FidelityNonIncreasingAndApproachesOne) {
  double prev = 1.0;
  for (int i = 0; i <= 40; ++i) {
    const double n_add = std::pow(10.0, -4.0 + 0.1 * i);
    const double f = bell_density_matrix(with_n_add(n_add)).psi_plus_fidelity();
    EXPECT_LE(f, prev + 1e-15);
    prev = f;
  }
  EXPECT_GT(bell_density_matrix(with_n_add(1e-6)).psi_plus_fidelity(), 1.0 - 1e-6);
}

TEST(Replacement, PsiPlusTargetMapsPhiPlus) {
  const auto ch = replacement_channel(ideal_bell_state().sigma, {0, 1});
  const Vector phi = phi_plus_vector();
  const auto out = apply_kraus(DensityMatrix::from_pure_state(phi), ch);
  const Vector psi = psi_plus_vector();
  EXPECT_LT(max_abs_diff(out.matrix(), psi * psi.adjoint()), 1e-12);
}

TEST(Replacement, MaximallyMixedTarget) {
  const auto target = DensityMatrix::from_matrix(o::id(2) / 4.0);
  const auto ch = replacement_channel(target, {0, 1});
  std::mt19937_64 rng(1);
  const auto out = apply_kraus(DensityMatrix::from_pure_state(o::random_pure(2, rng)), ch);
  EXPECT_LT(max_abs_diff(out.matrix(), o::id(2) / 4.0), 1e-12);
}

TEST(Replacement, InputIndependentAndComplete) {
  const auto sigma = bell_density_matrix(with_n_add(0.1)).sigma;
  const auto ch = replacement_channel(sigma, {1, 0});
  EXPECT_LT(ch.completeness_residual(), 1e-8);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto in = DensityMatrix::from_pure_state(o::random_pure(2, rng));
    const auto out = apply_kraus(in, ch);
    // Targets are (1, 0): the output carries sigma with its qubits swapped.
    const Matrix swapped = o::embed(sigma.matrix(), {1, 0}, 2);
    EXPECT_LT(max_abs_diff(out.matrix(), swapped), 1e-9);
  }
}

TEST(Replacement, EmbeddedActsOnTargetsOnly) {
  std::mt19937_64 rng(3);
  const Matrix rho = o::random_mixed(3, rng);
  const auto sigma = bell_density_matrix(with_n_add(0.2)).sigma;
  const auto out = apply_kraus(DensityMatrix::from_matrix(rho),
                               replacement_channel(sigma, {0, 2}));
  // Expected: sigma on (0, 2) tensored with the reduced state of qubit 1.
  const Matrix reduced = o::trace_keep(rho, {1}, 3);
  Matrix expect = Matrix::Zero(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      const int sr = (o::bit_of(r, 3, 0) << 1) | o::bit_of(r, 3, 2);
      const int sc = (o::bit_of(c, 3, 0) << 1) | o::bit_of(c, 3, 2);
      expect(r, c) = sigma.matrix()(sr, sc) * reduced(o::bit_of(r, 3, 1), o::bit_of(c, 3, 1));
    }
  EXPECT_LT(max_abs_diff(out.matrix(), expect), 1e-9);
}

TEST(Depolarizing, UnitFidelityIsIdentity) {
  const auto ch = depolarizing_channel({1, 1.0}, {0});
  std::mt19937_64 rng(4);
  const auto rho = DensityMatrix::from_matrix(o::random_mixed(1, rng));
  EXPECT_LT(max_abs_diff(apply_kraus(rho, ch).matrix(), rho.matrix()), 1e-15);
}

TEST(Depolarizing, OneQubitAverageFidelityExample) {
  // Average gate fidelity 0.99 gives Pauli error probability 0.015. In the
  // Pauli-mixing form X and Y each flip |0> with probability p/3, so the
  // excited population is 2p/3 = 0.01.
  const DepolarizingSpec spec{1, 0.99};
  EXPECT_NEAR(pauli_error_probability(spec), 0.015, 1e-15);
  const auto out = apply_kraus(DensityMatrix::zero_state(1), depolarizing_channel(spec, {0}));
  EXPECT_NEAR(out.matrix()(0, 0).real(), 0.99, 1e-14);
  EXPECT_NEAR(out.matrix()(1, 1).real(), 0.01, 1e-14);
}

TEST(Depolarizing, AverageFidelityRecoveredByIntegration) {
  // F_avg = (d F_pro + 1)/(d + 1) with F_pro = 1 - p for the Pauli form.
  for (int k : {1, 2}) {
    const double d = 1 << k;
    for (double f : {0.9, 0.98, 0.999}) {
      const double p = pauli_error_probability({k, f});
      EXPECT_NEAR((d * (1 - p) + 1) / (d + 1), f, 1e-14);
      EXPECT_NEAR(pauli_error_probability({k, f}, FidelityConvention::kProcess), 1 - f, 1e-15);
    }
  }
}

TEST(Depolarizing, MatchesMixingFormOracle) {
  std::mt19937_64 rng(5);
  const Matrix rho = o::random_mixed(3, rng);
  const DepolarizingSpec spec{2, 0.97};
  const auto out =
      apply_kraus(DensityMatrix::from_matrix(rho), depolarizing_channel(spec, {2, 1}));
  EXPECT_LT(max_abs_diff(out.matrix(),
                         o::depolarize(rho, o::pauli_p(0.97, 2), {2, 1}, 3)),
            1e-13);
}

TEST(Depolarizing, TwiceComposesOnPauliExpectations) {
  // Each non-identity Pauli expectation shrinks by lambda = 1 - p 4/3 per
  // application, so two applications shrink by lambda^2, the one-shot
  // channel with shrink 1 - p', p' = 1 - (1 - p 4/3)^2 in the I/d form.
  const DepolarizingSpec spec{1, 0.95};
  const double p = pauli_error_probability(spec);
  const double lambda = 1.0 - p * 4.0 / 3.0;
  const auto ch = depolarizing_channel(spec, {0});
  std::mt19937_64 rng(6);
  const auto rho = DensityMatrix::from_matrix(o::random_mixed(1, rng));
  const auto twice = apply_kraus(apply_kraus(rho, ch), ch);
  for (const Matrix& pauli : {o::x(), o::y(), o::z()}) {
    const double before = (pauli * rho.matrix()).trace().real();
    const double after = (pauli * twice.matrix()).trace().real();
    EXPECT_NEAR(after, lambda * lambda * before, 1e-14);
  }
}

TEST(Depolarizing, CompletenessAcrossFidelities) {
  for (int k : {1, 2}) {
    for (double f : {0.5, 0.9, 0.98, 0.99, 1.0}) {
      EXPECT_LT(depolarizing_channel({k, f}, k == 1 ? std::vector<int>{0}
                                                    : std::vector<int>{0, 1})
                    .completeness_residual(),
                1e-8);
    }
  }
}

TEST(Depolarizing, RejectsBadFidelity) {
  EXPECT_THROW(depolarizing_channel({1, 0.0}, {0}), std::invalid_argument);
  EXPECT_THROW(depolarizing_channel({1, 1.01}, {0}), std::invalid_argument);
  // Average fidelity 0.3 on one qubit would need p > 1.
  EXPECT_THROW(pauli_error_probability({1, 0.3}), std::invalid_argument);
}

TEST(Conventions, ParseRoundTrip) {
  for (auto c : {FidelityConvention::kAverageGate, FidelityConvention::kProcess}) {
    EXPECT_EQ(parse_fidelity_convention(to_string(c)), c);
  }
  for (auto p : {NoiseProfile::kPhysical, NoiseProfile::kEveryGate}) {
    EXPECT_EQ(parse_noise_profile(to_string(p)), p);
  }
  EXPECT_THROW(parse_noise_profile("sometimes"), std::invalid_argument);
}

TEST(LocalNoise, IdealAddsNothing) {
  EXPECT_TRUE(LocalNoise::ideal().is_ideal());
  EXPECT_FALSE(LocalNoise::ideal().after({0}).has_value());
  EXPECT_TRUE(LocalNoise::standard().after({0, 1}).has_value());
}

}  // namespace
}  // namespace telecut::noise

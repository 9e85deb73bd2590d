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
#include "telecut/metrics/metrics.hpp"
#include "telecut/noise/transducer.hpp"
#include "telecut/qsim/gate.hpp"
#include "telecut/telegate/telegate.hpp"

namespace telecut::telegate {
namespace {

namespace o = oracle;

noise::TransducerParams link(double n_add) {
  noise::TransducerParams p;
  p.n_add = n_add;
  return p;
}

// Data qubits (q1, q2) = (0, 1), communication pair (2, 3).
RemoteGateSpec spec_for(const noise::NoisyBellState& bell,
                        noise::LocalNoise local = noise::LocalNoise::ideal(),
                        noise::NoiseProfile profile = noise::NoiseProfile::kPhysical) {
  RemoteGateSpec s;
  s.bell = bell;
  s.local = local;
  s.profile = profile;
  return s;
}

DensityMatrix with_fresh_comm(const Matrix& data) {
  return tensor(DensityMatrix::from_matrix(data), DensityMatrix::zero_state(2));
}

// Explicit-measurement telegate on (q1, q2, q1c, q2c): the pair starts in
// X sigma X (Phi+ for an ideal link), q1c is read in Z and q2c in X, and the
// classical outcomes drive X on q2c and Z on q1. Returns the average over
// outcomes of the post-measurement data state.
Matrix trajectory_telegate(const Matrix& data, const Matrix& sigma) {
  const Matrix xi = o::embed(o::x(), {0}, 2);
  const Matrix pair = xi * sigma * xi.adjoint();
  Matrix rho = Matrix::Zero(16, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) rho(r, c) = data(r >> 2, c >> 2) * pair(r & 3, c & 3);
  rho = o::conj_by(o::embed(o::cnot(), {0, 2}, 4), rho);
  Matrix out = Matrix::Zero(4, 4);
  for (int m1 = 0; m1 < 2; ++m1) {
    Matrix branch = o::conj_by(o::embed(o::proj(m1), {2}, 4), rho);
    if (m1) branch = o::conj_by(o::embed(o::x(), {3}, 4), branch);
    branch = o::conj_by(o::embed(o::cnot(), {3, 1}, 4), branch);
    branch = o::conj_by(o::embed(o::h(), {3}, 4), branch);
    for (int m2 = 0; m2 < 2; ++m2) {
      Matrix leaf = o::conj_by(o::embed(o::proj(m2), {3}, 4), branch);
      if (m2) leaf = o::conj_by(o::embed(o::z(), {0}, 4), leaf);
      out += o::trace_keep(leaf, {0, 1}, 4);
    }
  }
  return out;
}

TEST(BellPrep, IdealLinkGivesPsiPlus) {
  const auto spec = spec_for(noise::bell_density_matrix(link(0.0)));
  const auto out = noisy_bell_prep(spec, 4).run(DensityMatrix::zero_state(4));
  const std::vector<int> comm{2, 3};
  const Vector psi = noise::psi_plus_vector();
  EXPECT_LT(max_abs_diff(partial_trace(out, comm).matrix(), psi * psi.adjoint()), 1e-12);
}

TEST(BellPrep, NoisyLinkGivesSigma) {
  const auto bell = noise::bell_density_matrix(link(0.1));
  const auto out = noisy_bell_prep(spec_for(bell), 4).run(DensityMatrix::zero_state(4));
  const std::vector<int> comm{2, 3};
  EXPECT_LT(max_abs_diff(partial_trace(out, comm).matrix(), o::pair_state(0.1)), 1e-9);
}

TEST(BellPrep, LocalNoiseOnlyLowersFidelityBoundedly) {
  // Under the every-gate profile the preparation H, CNOT and X all pay.
  const auto spec = spec_for(noise::ideal_bell_state(), noise::LocalNoise::standard(),
                             noise::NoiseProfile::kEveryGate);
  const auto out = noisy_bell_prep(spec, 4).run(DensityMatrix::zero_state(4));
  const std::vector<int> comm{2, 3};
  const double f = partial_trace(out, comm).overlap(noise::psi_plus_vector());
  EXPECT_LT(f, 1.0);
  EXPECT_GE(f, 0.99 * 0.98 * 0.99 - 0.01);
}

TEST(RemoteCnot, IdealLinkOnPlusZeroGivesBell) {
  const auto spec = spec_for(noise::ideal_bell_state());
  Vector plus0 = Vector::Zero(4);
  plus0(0) = plus0(2) = 1.0 / std::sqrt(2.0);
  const auto out =
      remote_cnot(with_fresh_comm(plus0 * plus0.adjoint()), spec);
  const Vector phi = noise::phi_plus_vector();
  EXPECT_LT(max_abs_diff(out.matrix(), phi * phi.adjoint()), 1e-12);
}

TEST(RemoteCnot, IdealLinkFlipsTarget) {
  const auto spec = spec_for(noise::ideal_bell_state());
  Matrix in = Matrix::Zero(4, 4);
  in(2, 2) = 1;  // |10>
  const auto out = remote_cnot(with_fresh_comm(in), spec);
  EXPECT_NEAR(out.matrix()(3, 3).real(), 1.0, 1e-12);
}

TEST(RemoteCnot, ChoiMatchesCnotForIdealLink) {
  // References r1, r2 on qubits 0, 1; data q1, q2 on 2, 3; comm on 4, 5.
  RemoteGateSpec spec = spec_for(noise::ideal_bell_state());
  spec.control = 2;
  spec.target = 3;
  spec.control_comm = 4;
  spec.target_comm = 5;
  Vector phi = Vector::Zero(16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) phi((a << 3) | (b << 2) | (a << 1) | b) = 0.5;
  const auto in = tensor(DensityMatrix::from_pure_state(phi), DensityMatrix::zero_state(2));
  const auto choi = remote_cnot(in, spec);
  const Matrix u = o::embed(o::cnot(), {2, 3}, 4);
  EXPECT_LT(max_abs_diff(choi.matrix(), u * phi * phi.adjoint() * u.adjoint()), 1e-9);
}

TEST(RemoteCnot, TwiceIsIdentity) {
  const auto spec = spec_for(noise::ideal_bell_state());
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix rho = o::random_mixed(2, rng);
    const auto once = remote_cnot(with_fresh_comm(rho), spec);
    const auto twice = remote_cnot(tensor(once, DensityMatrix::zero_state(2)), spec);
    EXPECT_LT(max_abs_diff(twice.matrix(), rho), 1e-8);
  }
}

TEST(RemoteCnot, DeferredMatchesTrajectoryAverage) {
  std::mt19937_64 rng(2);
  for (double n_add : {0.0, 0.1, 0.6}) {
    const auto bell = noise::bell_density_matrix(link(n_add));
    const auto spec = spec_for(bell);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector psi = o::random_pure(2, rng);
      const Matrix data = psi * psi.adjoint();
      const auto out = remote_cnot(with_fresh_comm(data), spec);
      EXPECT_LT(max_abs_diff(out.matrix(), trajectory_telegate(data, bell.sigma.matrix())),
                1e-8)
          << "n_add " << n_add;
    }
  }
}

TEST(RemoteCnot, NoisyLinkBellFidelityMatchesTrajectory) {
  const auto bell = noise::bell_density_matrix(link(0.1));
  Vector plus0 = Vector::Zero(4);
  plus0(0) = plus0(2) = 1.0 / std::sqrt(2.0);
  const Matrix data = plus0 * plus0.adjoint();
  const auto out = remote_cnot(with_fresh_comm(data), spec_for(bell));
  const double f = out.overlap(noise::phi_plus_vector());
  const Vector phi = noise::phi_plus_vector();
  const double ref =
      (phi.adjoint() * trajectory_telegate(data, o::pair_state(0.1)) * phi)(0, 0).real();
  EXPECT_GT(f, 0.5);
  EXPECT_LT(f, 1.0);
  EXPECT_NEAR(f, ref, 1e-10);
}

TEST(RemoteCnot, RejectsDirtyCommQubits) {
  const auto spec = spec_for(noise::ideal_bell_state());
  Matrix in = Matrix::Zero(16, 16);
  in(1, 1) = 1;  // target comm qubit in |1>
  EXPECT_THROW(remote_cnot(DensityMatrix::from_matrix(in), spec), std::invalid_argument);
}

TEST(RemoteCnot, RejectsOverlappingQubits) {
  RemoteGateSpec spec = spec_for(noise::ideal_bell_state());
  spec.target_comm = 0;
  EXPECT_THROW(spec.validate(4), std::invalid_argument);
}

TEST(GhzRemote, IdealTwoQubit) {
  const auto d = build_ghz_remote(2, link(0.0), noise::LocalNoise::ideal());
  EXPECT_NEAR(d[0], 0.5, 1e-12);
  EXPECT_NEAR(d[3], 0.5, 1e-12);
  EXPECT_NEAR(d[1] + d[2], 0.0, 1e-12);
}

TEST(GhzRemote, IdealFidelityIsOne) {
  for (int n = 2; n <= 5; ++n) {
    const auto d = build_ghz_remote(n, link(0.0), noise::LocalNoise::ideal());
    EXPECT_NEAR(metrics::hellinger_fidelity(d, OutcomeDistribution::ghz(n)), 1.0, 1e-9) << n;
  }
}

TEST(GhzRemote, LargerCircuitsDegradeMore) {
  const auto local = noise::LocalNoise::standard();
  const auto f = [&](int n) {
    return metrics::hellinger_fidelity(build_ghz_remote(n, link(0.1), local),
                                       OutcomeDistribution::ghz(n));
  };
  EXPECT_LT(f(5), f(2));
}

TEST(GhzRemote, MonotoneInNoise) {
  const auto local = noise::LocalNoise::standard();
  for (int n = 2; n <= 5; ++n) {
    double prev = 1.0;
    for (int i = 0; i < 30; ++i) {
      const double n_add = std::pow(10.0, -4.0 + 4.0 * i / 29.0);
      const double f = metrics::hellinger_fidelity(build_ghz_remote(n, link(n_add), local),
                                                   OutcomeDistribution::ghz(n));
      EXPECT_LE(f, prev + 1e-6) << "n " << n << " n_add " << n_add;
      prev = f;
    }
  }
}

TEST(GhzRemote, RegisterNeverExceedsDataPlusTwo) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = simulate_ghz_remote(n, link(0.05), noise::LocalNoise::standard());
    EXPECT_LE(r.peak_register_qubits, n + 2);
  }
}

TEST(GhzRemote, RejectsBadSize) {
  EXPECT_THROW(build_ghz_remote(1, link(0.0), noise::LocalNoise::ideal()),
               std::invalid_argument);
  EXPECT_THROW(build_ghz_remote(7, link(0.0), noise::LocalNoise::ideal()),
               std::invalid_argument);
}

TEST(GhzRemote, ThreeQubitMatchesEmbeddedOracle) {
  // Physical profile: H on the central qubit, CNOT(q1, q1c), CNOT(q2c, q2)
  // and H(q2c) pay local errors; the pair preparation, frame X, and the
  // deferred-measurement controls do not.
  const int n = 3, reg = n + 2;
  const auto local = noise::LocalNoise::standard();
  const double p1 = o::pauli_p(0.99, 1), p2 = o::pauli_p(0.98, 2);
  const Matrix sigma = o::pair_state(0.08);
  const Matrix xi = o::embed(o::x(), {0}, 2);
  const Matrix pair = xi * sigma * xi.adjoint();
  Matrix data = Matrix::Zero(8, 8);
  data(0, 0) = 1;
  data = o::depolarize(o::conj_by(o::embed(o::h(), {0}, n), data), p1, {0}, n);
  for (int peripheral = 1; peripheral < n; ++peripheral) {
    Matrix rho = Matrix::Zero(32, 32);
    for (int r = 0; r < 32; ++r)
      for (int c = 0; c < 32; ++c) rho(r, c) = data(r >> 2, c >> 2) * pair(r & 3, c & 3);
    const int q1 = 0, q2 = peripheral, q1c = 3, q2c = 4;
    rho = o::depolarize(o::conj_by(o::embed(o::cnot(), {q1, q1c}, reg), rho), p2, {q1, q1c}, reg);
    rho = o::conj_by(o::embed(o::cnot(), {q1c, q2c}, reg), rho);
    rho = o::depolarize(o::conj_by(o::embed(o::cnot(), {q2c, q2}, reg), rho), p2, {q2c, q2}, reg);
    rho = o::depolarize(o::conj_by(o::embed(o::h(), {q2c}, reg), rho), p1, {q2c}, reg);
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1;
    rho = o::conj_by(o::embed(cz, {q2c, q1}, reg), rho);
    data = o::trace_keep(rho, {0, 1, 2}, reg);
  }
  const auto got = simulate_ghz_remote(n, link(0.08), local);
  EXPECT_LT(max_abs_diff(got.state.matrix(), data), 1e-12);
}

}  // namespace
}  // namespace telecut::telegate

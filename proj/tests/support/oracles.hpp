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

// Reference implementations used only by tests. They deliberately avoid the
// library's index-offset kernels: operators are embedded as full 2^n x 2^n
// matrices element by element.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace telecut::oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline int bit_of(std::size_t index, int n, int q) {
  return static_cast<int>((index >> (n - 1 - q)) & 1U);
}

/// Full-register matrix of `op` acting on `targets`, built entry by entry.
inline M embed(const M& op, const std::vector<int>& targets, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const int k = static_cast<int>(targets.size());
  M full = M::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool rest_equal = true;
      for (int q = 0; q < n && rest_equal; ++q) {
        bool is_target = false;
        for (int t : targets) is_target = is_target || t == q;
        if (!is_target && bit_of(r, n, q) != bit_of(c, n, q)) rest_equal = false;
      }
      if (!rest_equal) continue;
      std::size_t lr = 0, lc = 0;
      for (int t = 0; t < k; ++t) {
        lr = (lr << 1) | static_cast<std::size_t>(bit_of(r, n, targets[t]));
        lc = (lc << 1) | static_cast<std::size_t>(bit_of(c, n, targets[t]));
      }
      full(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          op(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
    }
  }
  return full;
}

inline M conj_by(const M& u, const M& rho) { return u * rho * u.adjoint(); }

/// Partial trace by summing over traced index bits, keeping `keep` in order.
inline M trace_keep(const M& rho, const std::vector<int>& keep, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const int k = static_cast<int>(keep.size());
  M out = M::Zero(Eigen::Index{1} << k, Eigen::Index{1} << k);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool traced_equal = true;
      for (int q = 0; q < n && traced_equal; ++q) {
        bool kept = false;
        for (int t : keep) kept = kept || t == q;
        if (!kept && bit_of(r, n, q) != bit_of(c, n, q)) traced_equal = false;
      }
      if (!traced_equal) continue;
      std::size_t lr = 0, lc = 0;
      for (int t = 0; t < k; ++t) {
        lr = (lr << 1) | static_cast<std::size_t>(bit_of(r, n, keep[t]));
        lc = (lc << 1) | static_cast<std::size_t>(bit_of(c, n, keep[t]));
      }
      out(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc)) +=
          rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

inline M h() {
  M m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
inline M x() {
  M m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline M y() {
  M m(2, 2);
  m << 0, C(0, -1), C(0, 1), 0;
  return m;
}
inline M z() {
  M m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
inline M id(int n = 1) { return M::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n); }
inline M cnot() {
  M m = M::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}
inline M proj(int b) {
  M m = M::Zero(2, 2);
  m(b, b) = 1;
  return m;
}

inline M random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Eigen::Index d = Eigen::Index{1} << n;
  M a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = C(g(rng), g(rng));
  Eigen::HouseholderQR<M> qr(a);
  return qr.householderQ();
}

inline V random_pure(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  V v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = C(g(rng), g(rng));
  return v / v.norm();
}

/// Random full-rank mixed state: normalized G G^dagger.
inline M random_mixed(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Eigen::Index d = Eigen::Index{1} << n;
  M a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = C(g(rng), g(rng));
  M rho = a * a.adjoint();
  return rho / rho.trace();
}

/// Unnormalized weights of the heralded pair evaluated from the closed form,
/// in the order (|00>, |Psi+>, |01>+|10>, |11>). Written independently of the
/// library: loss is 1 - eta and each bracket is spelled out.
struct PairWeights {
  double w00, wpsi, wsingle, w11;
};

inline PairWeights pair_weights(double n_add, double eta, double bandwidth, double op_time,
                                double p_e) {
  const double rate = eta * bandwidth * n_add;
  const double root = 1.0 - std::exp(-rate * op_time / 2.0);
  const double pd = root * root;
  const double keep = 1.0 - pd;
  const double l = 1.0 - eta;
  const double l2 = l * l;
  PairWeights w{};
  const double term_a = (1.0 - l2) * keep;
  const double term_b = l2 * 2.0 * pd * keep;
  w.w00 = (1.0 - p_e * p_e) * 2.0 * pd * keep * (term_a + term_b);
  w.wpsi = 2.0 * p_e * (1.0 - p_e) * eta * eta * keep * keep;
  const double inner = eta * keep + l * keep * 2.0 * pd;
  w.wsingle = inner * inner - eta * eta * keep * keep;
  w.w11 = p_e * p_e * (1.0 - l2 + l2 * 2.0 * pd) * keep * keep * 2.0 * pd;
  return w;
}

inline M pair_state(double n_add, double eta = 0.5, double bandwidth = 1e7, double op_time = 1e-6,
                    double p_e = 0.5) {
  const PairWeights w = pair_weights(n_add, eta, bandwidth, op_time, p_e);
  M s = M::Zero(4, 4);
  const double r = 1.0 / std::sqrt(2.0);
  V psi = V::Zero(4);
  psi(1) = psi(2) = r;
  s(0, 0) = w.w00;
  s += w.wpsi * psi * psi.adjoint();
  s(1, 1) += w.wsingle;
  s(2, 2) += w.wsingle;
  s(3, 3) += w.w11;
  return s / s.trace().real();
}

/// Pauli-channel depolarizing map written in its mixing form:
/// rho -> (1 - p) rho + p/(4^k - 1) sum_{P != I} P rho P on `targets`.
inline M depolarize(const M& rho, double p, const std::vector<int>& targets, int n) {
  const M paulis[4] = {id(), x(), y(), z()};
  const int k = static_cast<int>(targets.size());
  const int count = 1 << (2 * k);
  M out = (1.0 - p) * rho;
  for (int idx = 1; idx < count; ++idx) {
    M op = M::Identity(1, 1);
    for (int t = 0; t < k; ++t) {
      const int which = (idx >> (2 * (k - 1 - t))) & 3;
      M next(op.rows() * 2, op.cols() * 2);
      for (Eigen::Index a = 0; a < op.rows(); ++a)
        for (Eigen::Index b = 0; b < op.cols(); ++b)
          next.block(a * 2, b * 2, 2, 2) = op(a, b) * paulis[which];
      op = next;
    }
    const M full = embed(op, targets, n);
    out += p / (count - 1) * full * rho * full.adjoint();
  }
  return out;
}

/// Average-gate-fidelity mapping to the Pauli error probability.
inline double pauli_p(double fidelity, int k) {
  const double d = static_cast<double>(1 << k);
  return (1.0 - fidelity) * (d + 1.0) / d;
}

/// Z-string expectations of a density matrix's diagonal, bit n-1-q flags q.
inline std::vector<double> z_strings(const M& rho, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> e(dim, 0.0);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t xidx = 0; xidx < dim; ++xidx) {
      const int parity = __builtin_popcountll(s & xidx) & 1;
      e[s] += (parity ? -1.0 : 1.0) * rho(static_cast<Eigen::Index>(xidx),
                                          static_cast<Eigen::Index>(xidx)).real();
    }
  }
  return e;
}

}  // namespace telecut::oracle

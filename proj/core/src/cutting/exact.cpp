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

#include "telecut/cutting/exact.hpp"

#include <stdexcept>
#include <string>

#include "telecut/cutting/reconstruction.hpp"
#include "telecut/qsim/circuit.hpp"
#include "telecut/qsim/gate.hpp"
#include "telecut/qsim/kernels.hpp"

namespace telecut::cutting {
namespace {

constexpr int kMaxExactSize = 6;

void check_size(int ghz_size) {
  if (ghz_size < 2 || ghz_size > kMaxExactSize) {
    throw std::invalid_argument("GHZ size " + std::to_string(ghz_size) + " outside [2, " +
                                std::to_string(kMaxExactSize) + "]");
  }
}

void apply_noise(Matrix& m, const noise::LocalNoise& local, std::vector<int> targets, int n) {
  if (auto ch = local.after(targets)) {
    kernels::apply_operator_sum(m, ch->operators, ch->targets, n);
  }
}

}  // namespace

DensityMatrix uncut_ghz_state(int ghz_size, const noise::LocalNoise& local) {
  check_size(ghz_size);
  Circuit c(ghz_size);
  local.append_noisy(c, gates::H(0));
  for (int q = 1; q < ghz_size; ++q) {
    local.append_noisy(c, gates::CNOT(0, q));
  }
  return c.run(DensityMatrix::zero_state(ghz_size));
}

std::vector<double> diagonal_z_expectations(const Matrix& m) {
  std::vector<double> diag(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    diag[static_cast<std::size_t>(i)] = m(i, i).real();
  }
  return z_string_expectations(diag);
}

std::vector<double> uncut_expectations(int ghz_size, const noise::LocalNoise& local) {
  return diagonal_z_expectations(uncut_ghz_state(ghz_size, local).matrix());
}

std::vector<double> exact_cut_expectations(int ghz_size, const noise::LocalNoise& local,
                                           const PauliCutDecomposition& decomposition) {
  check_size(ghz_size);
  const int n = ghz_size;
  const auto dim = static_cast<Eigen::Index>(register_dim(n));
  Matrix m = Matrix::Zero(dim, dim);
  m(0, 0) = 1.0;
  const Matrix h = gates::h();
  const std::vector<int> central = {0};
  kernels::apply_sandwich(m, h, h, central, n);
  apply_noise(m, local, {0}, n);

  std::vector<Matrix> local_ops;
  for (const CutTerm& t : decomposition.terms()) {
    local_ops.push_back(gates::kron(t.control_op, t.target_op));
  }
  for (int q = 1; q < n; ++q) {
    const std::vector<int> pair = {0, q};
    Matrix acc = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < local_ops.size(); ++i) {
      for (std::size_t j = 0; j < local_ops.size(); ++j) {
        Matrix term = m;
        kernels::apply_sandwich(term, local_ops[i], local_ops[j], pair, n);
        acc += decomposition[i].coefficient * decomposition[j].coefficient * term;
      }
    }
    m = std::move(acc);
    apply_noise(m, local, pair, n);
  }
  return diagonal_z_expectations(m);
}

}  // namespace telecut::cutting

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

#include "telecut/qsim/kernels.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace telecut::kernels {
namespace {

struct Layout {
  std::vector<std::size_t> offsets;  // local index -> global bit pattern
  std::vector<std::size_t> bases;    // global indices with all target bits clear
};

Layout make_layout(std::span<const int> targets, int n_qubits) {
  const auto k = targets.size();
  Layout layout;
  layout.offsets.assign(std::size_t{1} << k, 0);
  std::size_t mask = 0;
  for (std::size_t l = 0; l < layout.offsets.size(); ++l) {
    std::size_t off = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (l & (std::size_t{1} << (k - 1 - t))) {
        off |= qubit_bit(n_qubits, targets[t]);
      }
    }
    layout.offsets[l] = off;
  }
  for (int t : targets) {
    mask |= qubit_bit(n_qubits, t);
  }
  const auto dim = register_dim(n_qubits);
  layout.bases.reserve(dim >> k);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & mask) == 0) {
      layout.bases.push_back(i);
    }
  }
  return layout;
}

}  // namespace

void check_targets(std::span<const int> targets, int n_qubits, Eigen::Index op_dim) {
  if (targets.empty()) {
    throw std::invalid_argument("operator needs at least one target qubit");
  }
  if (op_dim != static_cast<Eigen::Index>(std::size_t{1} << targets.size())) {
    throw std::invalid_argument("operator dimension " + std::to_string(op_dim) +
                                " does not match " + std::to_string(targets.size()) +
                                " target qubit(s)");
  }
  for (std::size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] < 0 || targets[a] >= n_qubits) {
      throw std::invalid_argument("target qubit " + std::to_string(targets[a]) +
                                  " outside register of " + std::to_string(n_qubits));
    }
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      if (targets[a] == targets[b]) {
        throw std::invalid_argument("duplicate target qubit " + std::to_string(targets[a]));
      }
    }
  }
}

void apply_left(Matrix& m, const Matrix& op, std::span<const int> targets, int n_qubits) {
  check_targets(targets, n_qubits, op.rows());
  const Layout layout = make_layout(targets, n_qubits);
  const auto d = layout.offsets.size();
  std::vector<Complex> in(d);
  const Eigen::Index cols = m.cols();
  for (Eigen::Index c = 0; c < cols; ++c) {
    Complex* col = m.col(c).data();
    for (std::size_t base : layout.bases) {
      for (std::size_t l = 0; l < d; ++l) {
        in[l] = col[base + layout.offsets[l]];
      }
      for (std::size_t r = 0; r < d; ++r) {
        Complex acc = 0.0;
        for (std::size_t l = 0; l < d; ++l) {
          acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l)) * in[l];
        }
        col[base + layout.offsets[r]] = acc;
      }
    }
  }
}

void apply_right_adjoint(Matrix& m, const Matrix& op, std::span<const int> targets,
                         int n_qubits) {
  check_targets(targets, n_qubits, op.rows());
  const Layout layout = make_layout(targets, n_qubits);
  const auto d = layout.offsets.size();
  const Matrix conj_op = op.conjugate();
  std::vector<Complex> in(d);
  const Eigen::Index rows = m.rows();
  // (m U^dagger)(r, c') = sum_c m(r, c) conj(U(c', c))
  for (std::size_t base : layout.bases) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (std::size_t l = 0; l < d; ++l) {
        in[l] = m(r, static_cast<Eigen::Index>(base + layout.offsets[l]));
      }
      for (std::size_t out = 0; out < d; ++out) {
        Complex acc = 0.0;
        for (std::size_t l = 0; l < d; ++l) {
          acc += in[l] * conj_op(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(l));
        }
        m(r, static_cast<Eigen::Index>(base + layout.offsets[out])) = acc;
      }
    }
  }
}

void apply_sandwich(Matrix& m, const Matrix& left, const Matrix& right,
                    std::span<const int> targets, int n_qubits) {
  apply_left(m, left, targets, n_qubits);
  apply_right_adjoint(m, right, targets, n_qubits);
}

void apply_operator_sum(Matrix& m, std::span<const Matrix> ops, std::span<const int> targets,
                        int n_qubits) {
  if (ops.empty()) {
    throw std::invalid_argument("operator sum needs at least one operator");
  }
  if (ops.size() == 1) {
    apply_sandwich(m, ops[0], ops[0], targets, n_qubits);
    return;
  }
  Matrix acc = Matrix::Zero(m.rows(), m.cols());
  Matrix term;
  for (const Matrix& k : ops) {
    term = m;
    apply_sandwich(term, k, k, targets, n_qubits);
    acc += term;
  }
  m = std::move(acc);
}

Matrix partial_trace(const Matrix& m, std::span<const int> keep, int n_qubits) {
  if (keep.empty()) {
    throw std::invalid_argument("partial trace must keep at least one qubit");
  }
  check_targets(keep, n_qubits, static_cast<Eigen::Index>(std::size_t{1} << keep.size()));
  const Layout kept = make_layout(keep, n_qubits);
  // kept.bases enumerates the traced-out configurations.
  const auto d = kept.offsets.size();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      Complex acc = 0.0;
      for (std::size_t t : kept.bases) {
        acc += m(static_cast<Eigen::Index>(t + kept.offsets[i]),
                 static_cast<Eigen::Index>(t + kept.offsets[j]));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return out;
}

}  // namespace telecut::kernels

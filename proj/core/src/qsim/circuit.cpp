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

#include "telecut/qsim/circuit.hpp"

#include <stdexcept>
#include <string>

#include "telecut/qsim/kernels.hpp"

namespace telecut {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits), live_(static_cast<std::size_t>(n_qubits), true) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("circuit register size " + std::to_string(n_qubits) +
                                " out of range");
  }
}

void Circuit::check_live(const std::vector<int>& targets) const {
  for (int q : targets) {
    if (q < 0 || q >= n_qubits_) {
      throw std::invalid_argument("instruction target " + std::to_string(q) +
                                  " outside circuit of " + std::to_string(n_qubits_) + " qubits");
    }
    if (!live_[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("instruction addresses traced-out qubit " + std::to_string(q));
    }
  }
}

Circuit& Circuit::add(GateOp gate) {
  check_live(gate.targets);
  kernels::check_targets(gate.targets, n_qubits_, gate.unitary.rows());
  instructions_.emplace_back(std::move(gate));
  return *this;
}

Circuit& Circuit::add(KrausChannel channel) {
  check_live(channel.targets);
  kernels::check_targets(channel.targets, n_qubits_, channel.operators.front().rows());
  instructions_.emplace_back(std::move(channel));
  return *this;
}

Circuit& Circuit::add(TraceOut trace_out) {
  check_live(trace_out.qubits);
  std::size_t remaining = 0;
  for (bool b : live_) {
    remaining += b ? 1 : 0;
  }
  if (trace_out.qubits.size() >= remaining) {
    throw std::invalid_argument("trace-out would remove every qubit");
  }
  for (int q : trace_out.qubits) {
    if (!live_[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("qubit traced out twice");
    }
    live_[static_cast<std::size_t>(q)] = false;
  }
  instructions_.emplace_back(std::move(trace_out));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("appending circuits with different register sizes");
  }
  for (const Instruction& inst : other.instructions_) {
    std::visit([this](const auto& op) { add(op); }, inst);
  }
  return *this;
}

std::vector<int> Circuit::live_qubits() const {
  std::vector<int> out;
  for (int q = 0; q < n_qubits_; ++q) {
    if (live_[static_cast<std::size_t>(q)]) {
      out.push_back(q);
    }
  }
  return out;
}

DensityMatrix Circuit::run(DensityMatrix state) const {
  if (state.n_qubits() != n_qubits_) {
    throw std::invalid_argument("state has " + std::to_string(state.n_qubits()) +
                                " qubits, circuit expects " + std::to_string(n_qubits_));
  }
  Matrix out = evolve(state.matrix());
  const auto width = static_cast<int>(live_qubits().size());
  return unchecked_state(width, std::move(out));
}

Matrix Circuit::evolve(Matrix m) const {
  const auto dim = static_cast<Eigen::Index>(register_dim(n_qubits_));
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("matrix does not match circuit register of " +
                                std::to_string(n_qubits_) + " qubits");
  }
  // position[label] is the label's current index in the shrinking register.
  std::vector<int> position(static_cast<std::size_t>(n_qubits_));
  for (int q = 0; q < n_qubits_; ++q) {
    position[static_cast<std::size_t>(q)] = q;
  }
  int width = n_qubits_;
  auto map = [&](const std::vector<int>& labels) {
    std::vector<int> out;
    out.reserve(labels.size());
    for (int q : labels) {
      out.push_back(position[static_cast<std::size_t>(q)]);
    }
    return out;
  };
  for (const Instruction& inst : instructions_) {
    if (const auto* gate = std::get_if<GateOp>(&inst)) {
      const auto t = map(gate->targets);
      kernels::apply_sandwich(m, gate->unitary, gate->unitary, t, width);
    } else if (const auto* channel = std::get_if<KrausChannel>(&inst)) {
      const auto t = map(channel->targets);
      kernels::apply_operator_sum(m, channel->operators, t, width);
    } else {
      const auto& traced = std::get<TraceOut>(inst).qubits;
      std::vector<bool> drop(static_cast<std::size_t>(n_qubits_), false);
      for (int q : traced) {
        drop[static_cast<std::size_t>(q)] = true;
      }
      std::vector<int> keep_positions;
      int next = 0;
      for (int q = 0; q < n_qubits_; ++q) {
        auto& pos = position[static_cast<std::size_t>(q)];
        if (pos < 0) {
          continue;
        }
        if (drop[static_cast<std::size_t>(q)]) {
          pos = -1;
          continue;
        }
        keep_positions.push_back(pos);
        pos = next++;
      }
      m = kernels::partial_trace(m, keep_positions, width);
      width = next;
    }
  }
  return m;
}

}  // namespace telecut

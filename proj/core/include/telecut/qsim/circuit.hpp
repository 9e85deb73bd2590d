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

#include <variant>
#include <vector>

#include "telecut/qsim/density_matrix.hpp"
#include "telecut/qsim/gate.hpp"
#include "telecut/qsim/kraus.hpp"

namespace telecut {

/// Discards the listed qubits. Later instructions keep using the original
/// labels; traced labels may not be addressed again.
struct TraceOut {
  std::vector<int> qubits;
};

using Instruction = std::variant<GateOp, KrausChannel, TraceOut>;

/// Ordered instruction list over labelled qubits 0..n_qubits-1.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Instruction>& instructions() const { return instructions_; }
  bool empty() const { return instructions_.empty(); }

  Circuit& add(GateOp gate);
  Circuit& add(KrausChannel channel);
  Circuit& add(TraceOut trace_out);
  Circuit& append(const Circuit& other);

  /// Labels still addressable after all instructions.
  std::vector<int> live_qubits() const;

  /// Runs on a state over all n_qubits labels. The result's qubits are the
  /// surviving labels in ascending order.
  DensityMatrix run(DensityMatrix state) const;

  /// Same evolution on an arbitrary matrix, which need not be a state.
  /// Returns the matrix over the surviving labels.
  Matrix evolve(Matrix m) const;

 private:
  void check_live(const std::vector<int>& targets) const;

  int n_qubits_;
  std::vector<Instruction> instructions_;
  std::vector<bool> live_;
};

}  // namespace telecut

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

#include "telecut/telegate/telegate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "telecut/noise/replacement.hpp"
#include "telecut/qsim/gate.hpp"
#include "telecut/qsim/kernels.hpp"

namespace telecut::telegate {
namespace {

constexpr double kCommResidue = 1e-9;

bool every_gate(const RemoteGateSpec& spec) {
  return spec.profile == noise::NoiseProfile::kEveryGate;
}

void add_gate(Circuit& c, GateOp gate, const noise::LocalNoise& local, bool charged) {
  if (charged) {
    local.append_noisy(c, std::move(gate));
  } else {
    c.add(std::move(gate));
  }
}

}  // namespace

ModuleLayout ModuleLayout::for_ghz(int ghz_size) {
  if (ghz_size < kMinGhzSize || ghz_size > kMaxGhzSize) {
    throw std::invalid_argument("GHZ size " + std::to_string(ghz_size) + " outside [" +
                                std::to_string(kMinGhzSize) + ", " +
                                std::to_string(kMaxGhzSize) + "]");
  }
  ModuleLayout layout;
  layout.central = 0;
  for (int q = 1; q < ghz_size; ++q) {
    layout.peripherals.push_back(q);
  }
  layout.control_comm = ghz_size;
  layout.target_comm = ghz_size + 1;
  return layout;
}

void ModuleLayout::validate() const {
  if (peripherals.empty()) {
    throw std::invalid_argument("layout needs at least one peripheral module");
  }
  if (peripherals.size() > 5) {
    throw std::invalid_argument("layout supports at most five peripheral modules");
  }
  std::vector<int> all = peripherals;
  all.push_back(central);
  all.push_back(control_comm);
  all.push_back(target_comm);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("layout qubit indices must be distinct");
  }
}

void RemoteGateSpec::validate(int n_qubits) const {
  std::vector<int> q = {control, target, control_comm, target_comm};
  for (int v : q) {
    if (v < 0 || v >= n_qubits) {
      throw std::invalid_argument("remote gate qubit " + std::to_string(v) +
                                  " outside register of " + std::to_string(n_qubits));
    }
  }
  std::sort(q.begin(), q.end());
  if (std::adjacent_find(q.begin(), q.end()) != q.end()) {
    throw std::invalid_argument("remote gate needs four distinct qubits");
  }
  local.validate();
}

Circuit noisy_bell_prep(const RemoteGateSpec& spec, int n_qubits) {
  spec.validate(n_qubits);
  const bool charged = every_gate(spec);
  // The replacement sits before the final X, so it targets X1 sigma X1 and
  // the X brings the pair to sigma.
  const Matrix x1 = gates::kron(gates::x(), gates::identity(1));
  const Matrix pre_x = x1 * spec.bell.sigma.matrix() * x1;
  Circuit c(n_qubits);
  add_gate(c, gates::H(spec.control_comm), spec.local, charged);
  c.add(gates::CNOT(spec.control_comm, spec.target_comm));
  c.add(noise::replacement_channel(unchecked_state(2, pre_x),
                                   {spec.control_comm, spec.target_comm}));
  if (charged) {
    if (auto ch = spec.local.after({spec.control_comm, spec.target_comm})) {
      c.add(std::move(*ch));
    }
  }
  add_gate(c, gates::X(spec.control_comm), spec.local, charged);
  return c;
}

Circuit telegate_circuit(const RemoteGateSpec& spec, int n_qubits) {
  Circuit c = noisy_bell_prep(spec, n_qubits);
  const bool all = every_gate(spec);
  const auto& local = spec.local;
  // Psi+ -> Phi+ frame change.
  add_gate(c, gates::X(spec.control_comm), local, all);
  add_gate(c, gates::CNOT(spec.control, spec.control_comm), local, true);
  // Z measurement of q1c feeding forward an X onto q2c.
  add_gate(c, gates::CNOT(spec.control_comm, spec.target_comm), local, all);
  add_gate(c, gates::CNOT(spec.target_comm, spec.target), local, true);
  add_gate(c, gates::H(spec.target_comm), local, true);
  // X measurement of q2c feeding forward a Z onto q1.
  add_gate(c, gates::CZ(spec.target_comm, spec.control), local, all);
  c.add(TraceOut{{spec.control_comm, spec.target_comm}});
  return c;
}

DensityMatrix remote_cnot(DensityMatrix state, const RemoteGateSpec& spec) {
  const int n = state.n_qubits();
  spec.validate(n);
  const std::vector<int> comm = {spec.control_comm, spec.target_comm};
  const Matrix reduced = kernels::partial_trace(state.matrix(), comm, n);
  Matrix zero = Matrix::Zero(4, 4);
  zero(0, 0) = 1.0;
  if (max_abs_diff(reduced, zero) > kCommResidue) {
    throw std::invalid_argument("communication qubits are not in |00> before a remote gate");
  }
  return telegate_circuit(spec, n).run(std::move(state));
}

RemoteGhzResult simulate_ghz_remote(int ghz_size, const noise::TransducerParams& params,
                                    const noise::LocalNoise& local, noise::NoiseProfile profile) {
  const ModuleLayout layout = ModuleLayout::for_ghz(ghz_size);
  layout.validate();
  local.validate();
  RemoteGateSpec spec;
  spec.bell = noise::bell_density_matrix(params);
  spec.local = local;
  spec.profile = profile;
  spec.control = layout.central;
  spec.control_comm = layout.control_comm;
  spec.target_comm = layout.target_comm;

  Circuit prep(ghz_size);
  local.append_noisy(prep, gates::H(layout.central));
  DensityMatrix state = prep.run(DensityMatrix::zero_state(ghz_size));
  int peak = state.n_qubits();
  const DensityMatrix fresh_pair = DensityMatrix::zero_state(2);
  for (int target : layout.peripherals) {
    state = tensor(state, fresh_pair);
    peak = std::max(peak, state.n_qubits());
    spec.target = target;
    state = remote_cnot(std::move(state), spec);
  }
  OutcomeDistribution dist = basis_probabilities(state);
  return RemoteGhzResult{std::move(dist), std::move(state), peak};
}

OutcomeDistribution build_ghz_remote(int ghz_size, const noise::TransducerParams& params,
                                     const noise::LocalNoise& local, noise::NoiseProfile profile) {
  return simulate_ghz_remote(ghz_size, params, local, profile).distribution;
}

}  // namespace telecut::telegate

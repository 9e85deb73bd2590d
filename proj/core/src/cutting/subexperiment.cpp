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

#include "telecut/cutting/subexperiment.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "telecut/qsim/gate.hpp"
#include "telecut/qsim/outcome.hpp"

namespace telecut::cutting {
namespace {

bool is_identity(const Matrix& m) { return m == Matrix::Identity(m.rows(), m.cols()); }

void add(Circuit& c, GateOp gate, const noise::LocalNoise& local, bool charged) {
  if (charged) {
    local.append_noisy(c, std::move(gate));
  } else {
    c.add(std::move(gate));
  }
}

}  // namespace

void append_cut_side(Circuit& circuit, int data, int ancilla, const TermSelection& sel,
                     const PauliCutDecomposition& decomposition, CutSide side,
                     const noise::LocalNoise& local, noise::NoiseProfile profile) {
  const bool charged = profile == noise::NoiseProfile::kEveryGate;
  auto pick = [&](int term) -> const Matrix& {
    const CutTerm& t = decomposition[static_cast<std::size_t>(term)];
    return side == CutSide::kControl ? t.control_op : t.target_op;
  };
  const Matrix& first = pick(sel.i);
  if (sel.diagonal()) {
    if (!is_identity(first)) {
      add(circuit, GateOp::make(first, {data}, "term"), local, charged);
    }
    return;
  }
  if (ancilla < 0) {
    throw std::invalid_argument("off-diagonal cut term needs an ancilla");
  }
  const Matrix& second = pick(sel.j);
  add(circuit, gates::H(ancilla), local, charged);
  const Matrix cu = gates::controlled_pair(first, second);
  if (!is_identity(cu)) {
    add(circuit, GateOp::make(cu, {ancilla, data}, "c-term"), local, charged);
  }
  if (sel.k == 1) {
    add(circuit, gates::Sdg(ancilla), local, charged);
  }
  add(circuit, gates::H(ancilla), local, charged);
}

void append_ghz_preamble(Circuit& circuit, int central, const noise::LocalNoise& local) {
  local.append_noisy(circuit, gates::H(central));
}

SubExperiment build_subexperiment(int ghz_size, std::span<const TermSelection> selections,
                                  const QpdSampler& sampler, const noise::LocalNoise& local,
                                  noise::NoiseProfile profile) {
  if (ghz_size < 2) {
    throw std::invalid_argument("cut GHZ needs at least two qubits");
  }
  if (static_cast<int>(selections.size()) != ghz_size - 1) {
    throw std::invalid_argument("expected one term selection per cut");
  }
  const auto& dec = sampler.decomposition();
  SubExperiment ex;
  ex.ghz_size = ghz_size;
  ex.selections.assign(selections.begin(), selections.end());

  int control_ancillas = 0;
  for (const TermSelection& sel : selections) {
    if (sampler.probability(sel) == 0.0) {
      throw std::invalid_argument("inadmissible term selection");
    }
    control_ancillas += sel.diagonal() ? 0 : 1;
    ex.weight *= sampler.weight(sel);
  }

  ModuleCircuit central;
  central.circuit = Circuit(1 + control_ancillas);
  append_ghz_preamble(central.circuit, 0, local);
  int next_ancilla = 1;
  for (const TermSelection& sel : selections) {
    int anc = -1;
    if (!sel.diagonal()) {
      anc = next_ancilla++;
      central.ancillas.push_back(anc);
      central.bases.push_back(sel.k == 0 ? AncillaBasis::kX : AncillaBasis::kY);
    }
    append_cut_side(central.circuit, 0, anc, sel, dec, CutSide::kControl, local, profile);
  }
  ex.modules.push_back(std::move(central));

  for (const TermSelection& sel : selections) {
    ModuleCircuit peripheral;
    const int anc = sel.diagonal() ? -1 : 1;
    peripheral.circuit = Circuit(sel.diagonal() ? 1 : 2);
    if (anc > 0) {
      peripheral.ancillas.push_back(anc);
      peripheral.bases.push_back(sel.k == 0 ? AncillaBasis::kX : AncillaBasis::kY);
    }
    append_cut_side(peripheral.circuit, 0, anc, sel, dec, CutSide::kTarget, local, profile);
    ex.modules.push_back(std::move(peripheral));
  }
  return ex;
}

double product_mean(const SubExperiment& experiment, std::uint32_t observable) {
  const int n = experiment.ghz_size;
  if (observable >= (std::uint32_t{1} << n)) {
    throw std::out_of_range("observable index out of range");
  }
  double mean = 1.0;
  for (int m = 0; m < static_cast<int>(experiment.modules.size()); ++m) {
    const ModuleCircuit& mod = experiment.modules[static_cast<std::size_t>(m)];
    const int width = mod.circuit.n_qubits();
    const DensityMatrix out = mod.circuit.run(DensityMatrix::zero_state(width));
    const OutcomeDistribution dist = basis_probabilities(out);
    std::size_t mask = 0;
    if ((observable >> (n - 1 - m)) & 1U) {
      mask |= qubit_bit(width, 0);
    }
    for (int a : mod.ancillas) {
      mask |= qubit_bit(width, a);
    }
    double e = 0.0;
    for (std::size_t x = 0; x < dist.size(); ++x) {
      e += (std::popcount(x & mask) % 2 == 0 ? 1.0 : -1.0) * dist[x];
    }
    mean *= e;
  }
  return mean;
}

}  // namespace telecut::cutting

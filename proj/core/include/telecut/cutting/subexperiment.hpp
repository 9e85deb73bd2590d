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

#include <cstdint>
#include <span>
#include <vector>

#include "telecut/cutting/qpd_sampler.hpp"
#include "telecut/noise/local_noise.hpp"
#include "telecut/qsim/circuit.hpp"

namespace telecut::cutting {

enum class AncillaBasis { kX, kY };

/// Which side of a cut a fragment implements.
enum class CutSide { kControl, kTarget };

/// The local circuit of one module. Qubit 0 is the module's data qubit, the
/// ancillas follow. Ancilla basis changes are already part of `circuit`, so
/// every qubit is read out in the computational basis.
struct ModuleCircuit {
  Circuit circuit{1};
  std::vector<int> ancillas;
  std::vector<AncillaBasis> bases;
};

/// A fully assembled cut GHZ-n subexperiment: module 0 holds the central
/// qubit and the control side of every cut, module c holds peripheral qubit c
/// and the target side of cut c.
struct SubExperiment {
  int ghz_size = 0;
  std::vector<TermSelection> selections;
  std::vector<ModuleCircuit> modules;
  /// prod_cuts q * s_ij * (k == 1 ? -1 : 1)
  double weight = 1.0;
};

/// Appends one side of a cut term to `circuit`: the bare operator when i == j,
/// otherwise a Hadamard test on `ancilla` with C(first, second) followed by
/// the X or Y basis change selected by k. Noise follows `profile`.
void append_cut_side(Circuit& circuit, int data, int ancilla, const TermSelection& sel,
                     const PauliCutDecomposition& decomposition, CutSide side,
                     const noise::LocalNoise& local, noise::NoiseProfile profile);

/// Operations applied to the central qubit before any cut.
void append_ghz_preamble(Circuit& circuit, int central, const noise::LocalNoise& local);

SubExperiment build_subexperiment(int ghz_size, std::span<const TermSelection> selections,
                                  const QpdSampler& sampler, const noise::LocalNoise& local,
                                  noise::NoiseProfile profile);

/// Expectation of (product of all ancilla eigenvalues) x (Z on every data
/// qubit flagged in `observable`), by direct simulation of each module.
/// Observable bit n-1-q flags data qubit q.
double product_mean(const SubExperiment& experiment, std::uint32_t observable);

}  // namespace telecut::cutting

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

#include "telecut/qsim/density_matrix.hpp"

namespace telecut::noise {

/// Microwave-to-optical transducer link parameters.
struct TransducerParams {
  double n_add = 0.0;          // input-referred added noise quanta
  double eta = 0.5;            // conversion efficiency
  double bandwidth_hz = 1e7;   // B
  double op_time_s = 1e-6;     // T
  double p_e = 0.5;            // qubit excitation probability

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// r_N = eta * B * n_add
double added_noise_rate(const TransducerParams& params);

/// P_d = (1 - exp(-r_N T / 2))^2
double dark_count_probability(const TransducerParams& params);

/// Unnormalized weights of the four components of the heralded pair.
struct BellCoefficients {
  double vacuum = 0.0;        // |00><00|
  double psi_plus = 0.0;      // |Psi+><Psi+|
  double single = 0.0;        // |01><01| + |10><10|
  double double_click = 0.0;  // |11><11|

  /// Trace of the unnormalized state; `single` enters twice.
  double trace() const { return vacuum + psi_plus + 2.0 * single + double_click; }
};

BellCoefficients bell_coefficients(const TransducerParams& params);

/// Two-qubit state shared by the communication qubits after heralding.
struct NoisyBellState {
  DensityMatrix sigma;

  /// <Psi+|sigma|Psi+>
  double psi_plus_fidelity() const;
};

/// Normalized mixture of the four components. Throws std::domain_error when
/// every coefficient vanishes.
NoisyBellState bell_density_matrix(const TransducerParams& params);

/// |Psi+><Psi+|, the heralded state of an ideal link.
NoisyBellState ideal_bell_state();

Vector psi_plus_vector();
Vector phi_plus_vector();

}  // namespace telecut::noise

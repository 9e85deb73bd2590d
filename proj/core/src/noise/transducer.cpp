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

#include "telecut/noise/transducer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace telecut::noise {

void TransducerParams::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!(n_add >= 0.0) || !std::isfinite(n_add)) fail("n_add must be finite and >= 0");
  if (!(eta >= 0.0 && eta <= 1.0)) fail("eta must lie in [0, 1]");
  if (!(bandwidth_hz >= 0.0) || !std::isfinite(bandwidth_hz)) fail("bandwidth must be >= 0");
  if (!(op_time_s >= 0.0) || !std::isfinite(op_time_s)) fail("operation time must be >= 0");
  if (!(p_e >= 0.0 && p_e <= 1.0)) fail("p_e must lie in [0, 1]");
}

double added_noise_rate(const TransducerParams& params) {
  params.validate();
  return params.eta * params.bandwidth_hz * params.n_add;
}

double dark_count_probability(const TransducerParams& params) {
  const double r_n = added_noise_rate(params);
  const double miss = 1.0 - std::exp(-r_n * params.op_time_s / 2.0);
  return miss * miss;
}

BellCoefficients bell_coefficients(const TransducerParams& params) {
  const double pd = dark_count_probability(params);
  const double eta = params.eta;
  const double pe = params.p_e;
  const double loss = 1.0 - eta;
  // Each line mirrors one term of the heralded density matrix as written,
  // without simplification.
  BellCoefficients c;
  c.vacuum = (1.0 - pe * pe) * 2.0 * pd * (1.0 - pd) *
             ((1.0 - loss * loss) * (1.0 - pd) + loss * loss * 2.0 * pd * (1.0 - pd));
  c.psi_plus = 2.0 * pe * (1.0 - pe) * eta * eta * (1.0 - pd) * (1.0 - pd);
  c.single = std::pow(eta * (1.0 - pd) + loss * (1.0 - pd) * 2.0 * pd, 2) -
             eta * eta * (1.0 - pd) * (1.0 - pd);
  c.double_click = pe * pe * ((1.0 - loss * loss) + loss * loss * 2.0 * pd) * (1.0 - pd) *
                   (1.0 - pd) * 2.0 * pd;
  return c;
}

Vector psi_plus_vector() {
  Vector v = Vector::Zero(4);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

Vector phi_plus_vector() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

double NoisyBellState::psi_plus_fidelity() const { return sigma.overlap(psi_plus_vector()); }

NoisyBellState bell_density_matrix(const TransducerParams& params) {
  const BellCoefficients c = bell_coefficients(params);
  const double norm = c.trace();
  if (!(norm > 0.0)) {
    throw std::domain_error("heralded state coefficients vanish (normalizer " +
                            std::to_string(norm) + ")");
  }
  const Vector psi = psi_plus_vector();
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) += c.vacuum;
  m += c.psi_plus * (psi * psi.adjoint());
  m(1, 1) += c.single;
  m(2, 2) += c.single;
  m(3, 3) += c.double_click;
  m /= norm;
  return NoisyBellState{DensityMatrix::from_matrix(std::move(m))};
}

NoisyBellState ideal_bell_state() {
  return NoisyBellState{DensityMatrix::from_pure_state(psi_plus_vector())};
}

}  // namespace telecut::noise

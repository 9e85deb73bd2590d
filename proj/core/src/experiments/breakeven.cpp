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

#include "telecut/experiments/breakeven.hpp"

#include <cmath>
#include <stdexcept>

namespace telecut::experiments {

double breakeven_efficiency(int n_gates) {
  if (n_gates < 1) throw std::invalid_argument("breakeven_efficiency needs at least one gate");
  // 9^N = eta^(-2N)  =>  eta = 9^(-1/2)
  return 1.0 / std::sqrt(9.0);
}

}  // namespace telecut::experiments

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

namespace telecut::experiments {

/// Transducer efficiency at which N cut gates (sampling overhead 9^N) cost
/// the same as N remote gates heralded with probability eta^2 each. The gate
/// count cancels, so the answer is 1/3 for every N >= 1.
double breakeven_efficiency(int n_gates);

}  // namespace telecut::experiments

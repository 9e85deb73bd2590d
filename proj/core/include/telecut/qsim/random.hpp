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
#include <initializer_list>
#include <random>

namespace telecut {

using Seed = std::uint64_t;

/// The engine behind every stochastic operation.
using Rng = std::mt19937_64;

/// One SplitMix64 step: a bijective 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent child seed from a master seed and a path of
/// indices, e.g. (master, ghz size, grid index, repetition). The result does
/// not depend on evaluation order, so parallel sweeps stay reproducible.
Seed derive_seed(Seed master, std::initializer_list<std::uint64_t> path);

inline Rng make_rng(Seed seed) { return Rng(seed); }

}  // namespace telecut

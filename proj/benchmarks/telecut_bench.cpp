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

#include <benchmark/benchmark.h>

#include "telecut/cutting/estimator.hpp"
#include "telecut/metrics/metrics.hpp"
#include "telecut/noise/depolarizing.hpp"
#include "telecut/noise/transducer.hpp"
#include "telecut/qsim/gate.hpp"
#include "telecut/qsim/kraus.hpp"
#include "telecut/telegate/telegate.hpp"

namespace {

using namespace telecut;

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DensityMatrix rho = DensityMatrix::zero_state(n);
  const GateOp g = gates::CNOT(0, n - 1);
  for (auto _ : state) {
    rho = apply_gate(std::move(rho), g);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_ApplyCnot)->DenseRange(2, 8, 2);

void BM_TwoQubitDepolarizing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DensityMatrix rho = DensityMatrix::zero_state(n);
  const KrausChannel ch = noise::depolarizing_channel({2, 0.98}, {0, n - 1});
  for (auto _ : state) {
    rho = apply_kraus(std::move(rho), ch);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_TwoQubitDepolarizing)->DenseRange(2, 8, 2);

void BM_RemoteGhz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  noise::TransducerParams link;
  link.n_add = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(telegate::build_ghz_remote(n, link, noise::LocalNoise::standard()));
  }
}
BENCHMARK(BM_RemoteGhz)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CutEstimatorBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cutting::CutEstimator est(n, noise::LocalNoise::standard());
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_CutEstimatorBuild)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CutSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shots = static_cast<std::uint64_t>(state.range(1));
  const cutting::CutEstimator est(n, noise::LocalNoise::standard());
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(est.sample(shots, ++seed, cutting::SamplingMode::kPerSubexperiment));
  }
}
BENCHMARK(BM_CutSample)->ArgsProduct({{2, 3, 4, 5}, {100, 10000}})->Unit(benchmark::kMillisecond);

void BM_Hellinger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ghz = OutcomeDistribution::ghz(n);
  std::vector<double> p(ghz.size(), 1.0 / static_cast<double>(ghz.size()));
  const auto uniform = OutcomeDistribution::make(p);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::hellinger_fidelity(ghz, uniform));
}
BENCHMARK(BM_Hellinger)->DenseRange(2, 10, 4);

}  // namespace

BENCHMARK_MAIN();

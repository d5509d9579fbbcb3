// Copyright 2026 The telematch Authors
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

#include <cmath>

#include "telematch/montecarlo.hpp"
#include "telematch/protocol.hpp"

namespace {

using namespace telematch;

const PureInputState kInput(0.6, 0.8);

static void BM_MatchedUnitary(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(matched_unitary(0.8, 0.6, 1.0));
  }
}
BENCHMARK(BM_MatchedUnitary);

static void BM_AnalyticReport(benchmark::State& state) {
  const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
  const auto basis = generalized_bell(0.9, std::sqrt(0.19));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_report(kInput, ch, basis, MaxPerOutcome{}));
  }
}
BENCHMARK(BM_AnalyticReport);

static void BM_SimulateReport(benchmark::State& state) {
  const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
  const auto basis = generalized_bell(0.9, std::sqrt(0.19));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_report(kInput, ch, basis, MaxPerOutcome{}));
  }
}
BENCHMARK(BM_SimulateReport);

static void BM_MonteCarlo(benchmark::State& state) {
  const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo(kInput, ch, standard_bell(), FixedK{1.0}, trials, 42, threads));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trials));
}
BENCHMARK(BM_MonteCarlo)->Args({200000, 1})->Args({200000, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

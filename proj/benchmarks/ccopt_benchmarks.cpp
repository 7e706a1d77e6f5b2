// Copyright 2026 The ccopt Authors
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

#include <vector>

#include "ccopt/explorer.hpp"
#include "ccopt/problem.hpp"
#include "ccopt/sampling.hpp"
#include "ccopt/scenario.hpp"
#include "ccopt/violation.hpp"

namespace ccopt {
namespace {

void BM_EstimateViolation(benchmark::State& state) {
  const auto problem = make_benchmark();
  auto stream = RngStream::derive(kDefaultSeed, {0, 0, StreamPurpose::kDisturbances});
  const auto batch = sample_disturbances(problem.disturbance(), state.range(0), stream);
  const DecisionPoint u{-4.1, -4.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_violation(problem, u, batch));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateViolation)->Arg(100)->Arg(1000)->Arg(100000);

void BM_FilterFeasible(benchmark::State& state) {
  const auto problem = make_benchmark();
  auto decisions = RngStream::derive(kDefaultSeed, {0, 0, StreamPurpose::kDecisions});
  auto noise = RngStream::derive(kDefaultSeed, {0, 0, StreamPurpose::kDisturbances});
  const auto candidates = sample_decisions(problem.domain(), 100, decisions);
  const auto batch = sample_disturbances(problem.disturbance(), state.range(0), noise);
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter_feasible(problem, candidates, batch, 0.005));
  }
  state.SetItemsProcessed(state.iterations() * 100 * state.range(0));
}
BENCHMARK(BM_FilterFeasible)->Arg(100)->Arg(1000);

void BM_ExploreIteration(benchmark::State& state) {
  const auto problem = make_benchmark();
  ExplorerConfig config;
  config.n_disturbances = state.range(0);
  config.max_iterations = 1;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(explore(problem, config, trial++));
  }
}
BENCHMARK(BM_ExploreIteration)->Arg(100)->Arg(1000);

void BM_SolveScenario(benchmark::State& state) {
  const auto problem = make_benchmark();
  ScenarioConfig config;
  config.n_scenarios = state.range(0);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_scenario(problem, config, trial++));
  }
}
BENCHMARK(BM_SolveScenario)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto problem = make_benchmark();
  const DecisionPoint u{5.0, 5.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_violation(
        problem, u, kOracleMinSamples,
        RngStream::derive(kDefaultSeed, {0, 0, StreamPurpose::kOracle})));
  }
  state.SetItemsProcessed(state.iterations() * kOracleMinSamples);
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ccopt

BENCHMARK_MAIN();

// Copyright 2026 The pfsched Authors
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

#include "pfsched/oracle.hpp"
#include "pfsched/pfs_lp.hpp"

namespace {

pfsched::Instance make_instance(int n, int m) {
  pfsched::GeneratorConfig config;
  config.n = n;
  config.m = m;
  config.max_value = 20;
  config.seed = 777;
  config.agreeable = true;
  return pfsched::random_instance(config);
}

void BM_SolveSumCompletion(benchmark::State& state) {
  pfsched::Instance instance = make_instance(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  pfsched::Criterion criterion =
      pfsched::criterion_sum_completion(instance.n());
  for (auto _ : state) {
    pfsched::SolveResult res = pfsched::solve(instance, criterion);
    benchmark::DoNotOptimize(res.value);
  }
}

void BM_SolveMakespan(benchmark::State& state) {
  pfsched::Instance instance = make_instance(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  pfsched::Criterion criterion = pfsched::criterion_cmax(instance.n());
  for (auto _ : state) {
    pfsched::SolveResult res = pfsched::solve(instance, criterion);
    benchmark::DoNotOptimize(res.value);
  }
}

void BM_SolveCommonDueLateJobs(benchmark::State& state) {
  pfsched::Instance instance = make_instance(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  pfsched::Rat due(15);
  for (auto _ : state) {
    pfsched::CommonDueResult res =
        pfsched::solve_common_due_late_jobs(instance, due);
    benchmark::DoNotOptimize(res.value);
  }
}

}  // namespace

BENCHMARK(BM_SolveSumCompletion)->Args({4, 2})->Args({8, 2})->Args({12, 3});
BENCHMARK(BM_SolveMakespan)->Args({4, 2})->Args({8, 2})->Args({12, 3});
BENCHMARK(BM_SolveCommonDueLateJobs)->Args({4, 2})->Args({8, 2});

BENCHMARK_MAIN();

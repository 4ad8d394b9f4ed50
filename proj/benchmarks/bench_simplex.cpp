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

#include <vector>

#include "pfsched/oracle.hpp"
#include "pfsched/pfs_lp.hpp"

namespace {

// Exact-rational simplex on the fixed-order scheduling program, which is
// the solver's dominant cost: n(2m+1) structural variables.
void BM_FixedOrderProgram(benchmark::State& state) {
  pfsched::GeneratorConfig config;
  config.n = static_cast<int>(state.range(0));
  config.m = static_cast<int>(state.range(1));
  config.max_value = 20;
  config.seed = 12345;
  config.agreeable = true;
  pfsched::Instance instance = pfsched::random_instance(config);
  std::vector<int> order(config.n);
  for (int i = 0; i < config.n; ++i) order[i] = i + 1;
  pfsched::LinearProgram lp = pfsched::build_lp(
      instance, order, pfsched::criterion_sum_completion(config.n));
  for (auto _ : state) {
    pfsched::LpOutcome out = pfsched::solve(lp);
    benchmark::DoNotOptimize(out.value);
  }
}

}  // namespace

BENCHMARK(BM_FixedOrderProgram)
    ->Args({4, 2})
    ->Args({8, 2})
    ->Args({8, 4})
    ->Args({16, 4})
    ->Args({24, 3});

BENCHMARK_MAIN();

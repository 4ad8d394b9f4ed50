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

#include <algorithm>
#include <vector>

#include "pfsched/oracle.hpp"
#include "pfsched/transform.hpp"

namespace {

struct ConversionCase {
  pfsched::Instance instance;
  pfsched::Schedule schedule;
  std::vector<int> order;
};

// A random feasible schedule of a no-release instance, with the job order
// read off the realized completion times so the conversion hypothesis
// holds.
ConversionCase make_case(int n, int m, std::uint64_t seed) {
  pfsched::GeneratorConfig config;
  config.n = n;
  config.m = m;
  config.max_value = 12;
  config.seed = seed;
  pfsched::Instance drawn = pfsched::random_instance(config);
  std::vector<pfsched::Job> jobs = drawn.jobs();
  for (pfsched::Job& j : jobs) j.release = pfsched::Rat(0);
  pfsched::Instance instance(m, std::move(jobs));

  pfsched::Schedule schedule =
      pfsched::random_feasible_schedule(instance, seed * 31 + 7);
  schedule = pfsched::vertical_order(
      instance, pfsched::left_shift_normalize(instance, schedule));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pfsched::completion_time(schedule, a) <
           pfsched::completion_time(schedule, b);
  });
  return ConversionCase{std::move(instance), std::move(schedule),
                        std::move(order)};
}

void BM_LeftShiftNormalize(benchmark::State& state) {
  pfsched::GeneratorConfig config;
  config.n = static_cast<int>(state.range(0));
  config.m = static_cast<int>(state.range(1));
  config.max_value = 12;
  config.seed = 99;
  pfsched::Instance instance = pfsched::random_instance(config);
  pfsched::Schedule schedule =
      pfsched::random_feasible_schedule(instance, 4242);
  for (auto _ : state) {
    pfsched::Schedule out = pfsched::left_shift_normalize(instance, schedule);
    benchmark::DoNotOptimize(out.pieces().size());
  }
}

void BM_MakePfs(benchmark::State& state) {
  ConversionCase c = make_case(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)), 5);
  for (auto _ : state) {
    pfsched::Schedule out =
        pfsched::make_pfs(c.instance, c.schedule, &c.order);
    benchmark::DoNotOptimize(out.pieces().size());
  }
}

}  // namespace

BENCHMARK(BM_LeftShiftNormalize)->Args({6, 2})->Args({10, 3})->Args({16, 4});
BENCHMARK(BM_MakePfs)->Args({6, 2})->Args({10, 3})->Args({16, 4});

BENCHMARK_MAIN();

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

#ifndef PFSCHED_ORACLE_HPP_
#define PFSCHED_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "pfsched/model.hpp"

// Independent ground truth for testing the solver: exhaustive search over
// job orders and on-time subsets, a closed-form makespan bound, and seeded
// random generators for instances and feasible schedules.

namespace pfsched {

struct EnumerationResult {
  Rat value;
  std::vector<int> order;
  // True when the enumerated minimum is known to be the global optimum
  // (all releases equal, or the agreeability conditions certify the order).
  // Otherwise the value is only the best over schedules of the dominant
  // shape, which may or may not be globally optimal.
  bool global_optimum = false;
};

// Minimum fixed-order program value over every permutation of the jobs.
// Ties keep the lexicographically smallest order. The criterion must be a
// sum or max of per-job costs. Throws kTooLarge when n exceeds `cap`.
EnumerationResult enumerate_orders_optimum(const Instance& instance,
                                           const Criterion& criterion,
                                           int cap = 8);

// Classical wrap-around makespan for equal release dates:
// max(max_j p_j, sum_j p_j / m). Throws kPreconditionViolated when the
// release dates differ.
Rat mcnaughton_cmax(const Instance& instance);

struct LateJobsResult {
  Rat value;                     // total weight of the late jobs
  std::vector<int> on_time_set;  // ascending job ids finishing by d
};

// Exhaustive search over all subsets that can finish by the common due
// date; returns the minimum late weight and the argmin subset (ties keep
// the lexicographically smallest id list). Every job needs a weight.
// Throws kTooLarge when n exceeds `cap`.
LateJobsResult brute_force_late_jobs(const Instance& instance, const Rat& d,
                                     int cap = 16);

struct GeneratorConfig {
  int n = 1;
  int m = 1;
  int max_value = 10;      // upper bound on generated r, p, d, w
  std::uint64_t seed = 0;
  bool agreeable = false;  // co-sort so releases and processing both ascend
};

// Deterministic instance for the given seed. Jobs carry integer release,
// processing, due date, and weight drawn from [0, max_value] (processing
// and weight from [1, max_value]). With agreeable=true the jobs are
// relabeled so that releases, processing times, and due dates ascend
// together while weights descend.
Instance random_instance(const GeneratorConfig& config);

// Deterministic feasible schedule for the given seed: randomized list
// scheduling with random machine choice, random idling, and random
// preemption points. The result can be delayed and unordered but always
// passes check_feasible.
Schedule random_feasible_schedule(const Instance& instance,
                                  std::uint64_t seed);

}  // namespace pfsched

#endif  // PFSCHED_ORACLE_HPP_

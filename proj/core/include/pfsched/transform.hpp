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
//
// Constructive schedule transformations. All of them preserve feasibility and
// never increase any completion time, which makes them safe to apply under
// any regular criterion.

#pragma once

#include <vector>

#include "pfsched/model.hpp"

namespace pfsched {

// Repeatedly moves fragments of later pieces into earlier idle intervals
// until no permissible left shift remains. The result is non-delay; each
// job's completion time is less than or equal to its input value.
Schedule left_shift_normalize(const Instance& instance,
                              const Schedule& schedule);

// Reassigns concurrent jobs to machines slice by slice so that at every
// instant the running jobs sit on the lowest machines in rank order (job id
// order, or the given permutation). Completion times are unchanged;
// idempotent.
Schedule vertical_order(const Instance& instance, const Schedule& schedule,
                        const std::vector<int>* order = nullptr);

struct MakePfsStats {
  int exchanges = 0;       // fragment swaps performed
  int normalizations = 0;  // left-shift passes run
};

// Converts a feasible schedule into a non-delay schedule with the
// permutation-flow-shop shape (vertically ordered, at most one piece per
// job and machine, one common machine job sequence), without increasing any
// completion time. Requires release dates and the schedule's completion
// times (after normalization) to be nondecreasing along the ranking; throws
// kOrderHypothesisViolated otherwise. The conversion works rank by rank,
// swapping equal-length fragments between an out-of-order job and a
// later-ranked job until the machine sequences agree with the ranking.
Schedule make_pfs(const Instance& instance, const Schedule& schedule,
                  const std::vector<int>* order = nullptr,
                  MakePfsStats* stats = nullptr);

// Rebuilds the schedule so that jobs j and k trade their late work: pieces
// of all other jobs stay put, j's pieces before k's release stay put, both
// keep the intervals where they run concurrently, and the remaining slots
// from k's release onward are filled first with j's remaining work, then
// k's. Requires r_j <= r_k, p_j <= p_k and completion(j) > completion(k);
// afterwards completion(k) equals j's old completion and completion(j) is
// at most k's old completion. Throws kPreconditionViolated naming any
// failed requirement.
Schedule exchange_pair(const Instance& instance, const Schedule& schedule,
                       int j, int k);

}  // namespace pfsched

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
// The order-and-solve layer. A completion order of the jobs is either
// derived from agreeability conditions on the input data or supplied by the
// caller; a linear program over that fixed order then yields an optimal
// preemptive schedule with the permutation-flow-shop shape.

#ifndef PFSCHED_PFS_LP_HPP_
#define PFSCHED_PFS_LP_HPP_

#include <map>
#include <string>
#include <vector>

#include "pfsched/model.hpp"
#include "pfsched/simplex.hpp"

namespace pfsched {

// How a completion order was justified.
enum class OrderCase {
  kNoRelease,      // all release dates equal; order from a dominance key
  kAgreeableSum,   // releases and processing times agree; sum criterion with
                   // pairwise nondecreasing cost differences
  kAgreeableMax,   // as above with pairwise nonnegative cost differences
  kAgreeableWulj,  // releases, processing times up, weights down; common due
  kUserSupplied    // caller-provided, taken on faith
};

// "NO_RELEASE", "AGREEABLE_SUM", "AGREEABLE_MAX", "AGREEABLE_WULJ",
// "USER_SUPPLIED".
const char* order_case_name(OrderCase c);

struct OrderCertificate {
  // Job ids; position i holds the job with completion rank i+1.
  std::vector<int> permutation;
  OrderCase kind = OrderCase::kUserSupplied;
  // Human-readable record of the verified conditions.
  std::vector<std::string> evidence;
};

// True iff (f - g) is nondecreasing on [0, inf). Decided segment by segment
// on the merged breakpoint grid: slope(f) >= slope(g) everywhere.
bool check_difference_monotone(const PiecewiseLinearFn& f,
                               const PiecewiseLinearFn& g);

// True iff f(t) >= g(t) for every t >= 0. Checked at t=0, at every merged
// breakpoint, and on the final segment's slopes.
bool check_difference_nonnegative(const PiecewiseLinearFn& f,
                                  const PiecewiseLinearFn& g);

// Finds a completion order that provably carries an optimal schedule.
//
// With all releases equal the order comes from a criterion-specific
// dominance key (processing times, weights for the late-jobs count), checked
// by the same pairwise conditions; when the check fails, small instances
// fall back to exhaustive enumeration of orders. Otherwise jobs are sorted
// by (release, processing, id) and the pairwise condition of the matching
// case is verified for every ordered pair.
//
// Throws kNotAgreeable (with the offending job pair) when no order can be
// certified, and kTooLarge when only enumeration would remain but the
// instance exceeds the enumeration cap.
OrderCertificate determine_order(const Instance& instance,
                                 const Criterion& criterion);

// Builds the fixed-order LP. Jobs are renumbered so that rank i (1-based)
// is the i-th entry of `order`; variables are named t_<rank>_<machine>,
// p_<rank>_<machine>, C_<rank>, plus epigraph variables phi_<rank> (sum
// criterion) or a single z (max criterion).
//
// Constraints: machine splits sum to the processing time; within a job the
// machines are used in the order M_m, ..., M_1; on every machine the jobs
// appear in rank order; the start on M_m respects the release date; the
// completion is the end on M_1. The objective minimizes the epigraph
// variables, which dominate every affine segment of the cost functions.
//
// Throws kUnsupportedCriterion for the late-jobs criterion (handled by
// solve_common_due_late_jobs) and kInvalidArgument for a bad permutation or
// a criterion whose function list does not match the instance.
LinearProgram build_lp(const Instance& instance, const std::vector<int>& order,
                       const Criterion& criterion);

// Turns an LP solution into a schedule: one piece per (rank, machine) with
// a positive split, placed on that machine at its start variable, with job
// ids mapped back through `order`. The solution is first re-checked against
// all the LP constraints; kInfeasibleLpSolution reports the first
// violation. Entries beyond the structural variables are ignored.
Schedule extract_schedule(const Instance& instance,
                          const std::vector<int>& order,
                          const std::map<std::string, Rat>& lp_solution);

struct SolveResult {
  Schedule schedule;
  Rat value;  // the LP optimum for the certified order
  OrderCertificate certificate;
  int pivots = 0;  // total simplex pivots across all LP solves
};

// End-to-end: certify an order (or adopt the supplied one), solve the LP,
// extract, then normalize the schedule into non-delay
// permutation-flow-shop form.
//
// For a certified order the returned schedule's criterion value equals the
// LP optimum exactly (this is asserted). For a user-supplied order the LP
// value is an upper bound for the order, and the schedule may beat it.
//
// Throws kUnsupportedCriterion for the late-jobs criterion, propagates
// kNotAgreeable from determine_order, and kOrderHypothesisViolated when a
// user-supplied order is incompatible with the release dates.
SolveResult solve(const Instance& instance, const Criterion& criterion,
                  const std::vector<int>* order = nullptr);

struct CommonDueResult {
  Schedule schedule;
  Rat value;  // total weight of late jobs
  int k_star = 0;  // number of on-time jobs
  OrderCertificate certificate;
  int pivots = 0;
};

// Weighted number of late jobs with a common due date. Requires the
// agreeable (release up, processing up, weight down) order; scans prefixes
// 1..k of that order for the largest k whose jobs can all finish by the due
// date (a feasibility LP with deadline rows), then schedules the remaining
// jobs after the due date. Prefix feasibility is checked for every k and
// asserted to be monotone.
CommonDueResult solve_common_due_late_jobs(const Instance& instance,
                                           const Rat& common_due);

}  // namespace pfsched

#endif  // PFSCHED_PFS_LP_HPP_

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
// Problem data for preemptive scheduling on identical parallel machines:
// jobs with release dates, schedules made of pieces, and regular
// (nondecreasing convex piecewise-linear) cost criteria.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pfsched/errors.hpp"
#include "pfsched/rational.hpp"

namespace pfsched {

struct Job {
  int id = 0;  // 1-based
  Rat release;
  Rat processing;
  std::optional<Rat> due;
  std::optional<Rat> weight;
};

// An instance with m identical machines. Job ids are exactly 1..n, in list
// order, so jobs[i] has id i+1.
class Instance {
 public:
  Instance(int machines, std::vector<Job> jobs);

  int machines() const { return machines_; }
  int n() const { return static_cast<int>(jobs_.size()); }
  const std::vector<Job>& jobs() const { return jobs_; }
  const Job& job(int id) const;

 private:
  int machines_;
  std::vector<Job> jobs_;
};

// Nondecreasing convex piecewise-linear function on [0, inf): breakpoints
// are strictly increasing and positive, slopes (one per segment) are
// nonnegative and nondecreasing. f(0) = initial_value, which may be
// negative (lateness-style costs).
class PiecewiseLinearFn {
 public:
  PiecewiseLinearFn(std::vector<Rat> breakpoints, Rat initial_value,
                    std::vector<Rat> slopes);

  // f(t) = t, the completion time itself.
  static PiecewiseLinearFn identity();

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const Rat& initial_value() const { return initial_; }
  const std::vector<Rat>& slopes() const { return slopes_; }
  int segment_count() const { return static_cast<int>(slopes_.size()); }

  Rat value(const Rat& t) const;

  // The affine extension (a, b) of segment i, i.e. the line a*t + b that the
  // function follows on that segment. Convexity makes f the pointwise max of
  // these lines, which is what the epigraph constraints in the LP use.
  std::pair<Rat, Rat> segment_line(int i) const;

 private:
  std::vector<Rat> breakpoints_;
  Rat initial_;
  std::vector<Rat> slopes_;
};

enum class CriterionKind {
  kSum,                   // minimize sum_j f_j(C_j)
  kMax,                   // minimize max_j f_j(C_j)
  kWeightedLateCommonDue  // minimize sum_j w_j * [C_j > d], common due date d
};

struct Criterion {
  CriterionKind kind = CriterionKind::kSum;
  // One function per job for kSum / kMax; unused for the late-jobs count.
  std::vector<PiecewiseLinearFn> per_job;
  // Set for kWeightedLateCommonDue.
  std::optional<Rat> common_due;
};

Criterion criterion_sum_completion(int n);
Criterion criterion_cmax(int n);
// sum_j w_j max(0, C_j - d_j); every job needs due and weight.
Criterion criterion_weighted_tardiness(const Instance& instance);
// max_j (C_j - d_j); every job needs a due date.
Criterion criterion_lmax(const Instance& instance);
Criterion criterion_weighted_late_common_due(const Rat& common_due);

// A maximal uninterrupted fragment of one job on one machine, over the
// half-open interval [start, end). Machines are 1-based.
struct Piece {
  int job = 0;
  int machine = 0;
  Rat start;
  Rat end;
};

// A piece list in canonical form: sorted by (machine, start, job, end),
// zero-length pieces dropped, and abutting pieces of the same job on the
// same machine merged. Construction does not check feasibility; see
// validate.hpp for that, so that validators can be exercised on bad input.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

 private:
  std::vector<Piece> pieces_;
};

// Latest piece end of the job. Throws kUnknownJob if the schedule has no
// piece of it.
Rat completion_time(const Schedule& schedule, int job);

// J(t) with machine assignments, sorted by machine index: the (job, machine)
// pairs whose piece satisfies start <= t < end. Requires t >= 0.
std::vector<std::pair<int, int>> jobs_processed_at(const Schedule& schedule,
                                                   const Rat& t);

// Total scheduled length of the job's pieces.
Rat processed_amount(const Schedule& schedule, int job);

// Criterion value of a complete schedule. Throws kIncompleteSchedule when
// some job's pieces do not sum to its processing time.
Rat evaluate(const Instance& instance, const Schedule& schedule,
             const Criterion& criterion);

}  // namespace pfsched

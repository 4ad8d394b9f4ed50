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

#include "pfsched/model.hpp"

#include <algorithm>
#include <string>

namespace pfsched {

Instance::Instance(int machines, std::vector<Job> jobs)
    : machines_(machines), jobs_(std::move(jobs)) {
  if (machines_ < 1) {
    throw Error(Errc::kInvalidArgument, "machine count must be >= 1");
  }
  if (jobs_.empty()) {
    throw Error(Errc::kInvalidArgument, "instance needs at least one job");
  }
  for (int i = 0; i < static_cast<int>(jobs_.size()); ++i) {
    const Job& j = jobs_[i];
    if (j.id != i + 1) {
      throw Error(Errc::kInvalidArgument,
                  "job ids must be 1..n in order; position " +
                      std::to_string(i) + " has id " + std::to_string(j.id));
    }
    if (j.processing.sign() <= 0) {
      throw Error(Errc::kInvalidArgument,
                  "job " + std::to_string(j.id) + " needs processing > 0");
    }
    if (j.release.sign() < 0) {
      throw Error(Errc::kInvalidArgument,
                  "job " + std::to_string(j.id) + " needs release >= 0");
    }
    if (j.weight && j.weight->sign() < 0) {
      throw Error(Errc::kInvalidArgument,
                  "job " + std::to_string(j.id) + " needs weight >= 0");
    }
  }
}

const Job& Instance::job(int id) const {
  if (id < 1 || id > n()) {
    throw Error(Errc::kUnknownJob, "job " + std::to_string(id));
  }
  return jobs_[id - 1];
}

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Rat> breakpoints,
                                     Rat initial_value, std::vector<Rat> slopes)
    : breakpoints_(std::move(breakpoints)),
      initial_(std::move(initial_value)),
      slopes_(std::move(slopes)) {
  if (slopes_.size() != breakpoints_.size() + 1) {
    throw Error(Errc::kInvalidArgument,
                "piecewise function needs one slope per segment");
  }
  for (size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i].sign() <= 0) {
      throw Error(Errc::kInvalidArgument, "breakpoints must be positive");
    }
    if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i])) {
      throw Error(Errc::kInvalidArgument,
                  "breakpoints must be strictly increasing");
    }
  }
  for (size_t i = 0; i < slopes_.size(); ++i) {
    if (slopes_[i].sign() < 0) {
      throw Error(Errc::kInvalidArgument, "slopes must be nonnegative");
    }
    if (i > 0 && slopes_[i] < slopes_[i - 1]) {
      throw Error(Errc::kInvalidArgument,
                  "slopes must be nondecreasing (convexity)");
    }
  }
}

PiecewiseLinearFn PiecewiseLinearFn::identity() {
  return PiecewiseLinearFn({}, Rat(0), {Rat(1)});
}

Rat PiecewiseLinearFn::value(const Rat& t) const {
  if (t.sign() < 0) {
    throw Error(Errc::kInvalidArgument, "function domain is [0, inf)");
  }
  Rat v = initial_;
  Rat x(0);
  for (size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] > t) break;
    v += slopes_[i] * (breakpoints_[i] - x);
    x = breakpoints_[i];
  }
  // Index of the segment containing t.
  size_t seg = 0;
  while (seg < breakpoints_.size() && breakpoints_[seg] <= t) ++seg;
  v += slopes_[seg] * (t - x);
  return v;
}

std::pair<Rat, Rat> PiecewiseLinearFn::segment_line(int i) const {
  if (i < 0 || i >= segment_count()) {
    throw Error(Errc::kInvalidArgument, "segment index out of range");
  }
  Rat x(0);
  Rat v = initial_;
  for (int k = 0; k < i; ++k) {
    v += slopes_[k] * (breakpoints_[k] - x);
    x = breakpoints_[k];
  }
  // Line through (x, v) with slope slopes_[i].
  return {slopes_[i], v - slopes_[i] * x};
}

namespace {

std::vector<PiecewiseLinearFn> n_identities(int n) {
  std::vector<PiecewiseLinearFn> fns;
  fns.reserve(n);
  for (int i = 0; i < n; ++i) fns.push_back(PiecewiseLinearFn::identity());
  return fns;
}

}  // namespace

Criterion criterion_sum_completion(int n) {
  return Criterion{CriterionKind::kSum, n_identities(n), std::nullopt};
}

Criterion criterion_cmax(int n) {
  return Criterion{CriterionKind::kMax, n_identities(n), std::nullopt};
}

Criterion criterion_weighted_tardiness(const Instance& instance) {
  std::vector<PiecewiseLinearFn> fns;
  fns.reserve(instance.n());
  for (const Job& j : instance.jobs()) {
    if (!j.due || !j.weight) {
      throw Error(Errc::kInvalidArgument,
                  "weighted tardiness needs due date and weight on job " +
                      std::to_string(j.id));
    }
    const Rat& d = *j.due;
    const Rat& w = *j.weight;
    if (w.sign() == 0) {
      fns.push_back(PiecewiseLinearFn({}, Rat(0), {Rat(0)}));
    } else if (d.sign() > 0) {
      fns.push_back(PiecewiseLinearFn({d}, Rat(0), {Rat(0), w}));
    } else {
      // Due date at or before zero: the job is tardy from the start.
      fns.push_back(PiecewiseLinearFn({}, -w * d, {w}));
    }
  }
  return Criterion{CriterionKind::kSum, std::move(fns), std::nullopt};
}

Criterion criterion_lmax(const Instance& instance) {
  std::vector<PiecewiseLinearFn> fns;
  fns.reserve(instance.n());
  for (const Job& j : instance.jobs()) {
    if (!j.due) {
      throw Error(Errc::kInvalidArgument,
                  "maximum lateness needs a due date on job " +
                      std::to_string(j.id));
    }
    fns.push_back(PiecewiseLinearFn({}, -*j.due, {Rat(1)}));
  }
  return Criterion{CriterionKind::kMax, std::move(fns), std::nullopt};
}

Criterion criterion_weighted_late_common_due(const Rat& common_due) {
  return Criterion{CriterionKind::kWeightedLateCommonDue, {}, common_due};
}

Schedule::Schedule(std::vector<Piece> pieces) {
  for (const Piece& p : pieces) {
    if (p.job < 1) {
      throw Error(Errc::kInvalidArgument, "piece with job id < 1");
    }
    if (p.machine < 1) {
      throw Error(Errc::kInvalidArgument, "piece with machine index < 1");
    }
    if (p.end < p.start) {
      throw Error(Errc::kInvalidArgument,
                  "piece with end before start (job " + std::to_string(p.job) +
                      ")");
    }
    if (p.start != p.end) pieces_.push_back(p);  // drop zero-length pieces
  }
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) {
    if (a.machine != b.machine) return a.machine < b.machine;
    if (a.start != b.start) return a.start < b.start;
    if (a.job != b.job) return a.job < b.job;
    return a.end < b.end;
  });
  // Merge abutting fragments of the same job on the same machine so that
  // each stored piece is maximal.
  std::vector<Piece> merged;
  for (Piece& p : pieces_) {
    if (!merged.empty() && merged.back().machine == p.machine &&
        merged.back().job == p.job && merged.back().end == p.start) {
      merged.back().end = p.end;
    } else {
      merged.push_back(std::move(p));
    }
  }
  pieces_ = std::move(merged);
}

Rat completion_time(const Schedule& schedule, int job) {
  bool found = false;
  Rat best(0);
  for (const Piece& p : schedule.pieces()) {
    if (p.job != job) continue;
    if (!found || best < p.end) best = p.end;
    found = true;
  }
  if (!found) {
    throw Error(Errc::kUnknownJob,
                "job " + std::to_string(job) + " has no pieces");
  }
  return best;
}

std::vector<std::pair<int, int>> jobs_processed_at(const Schedule& schedule,
                                                   const Rat& t) {
  if (t.sign() < 0) {
    throw Error(Errc::kInvalidArgument, "time must be >= 0");
  }
  std::vector<std::pair<int, int>> result;
  for (const Piece& p : schedule.pieces()) {
    if (p.start <= t && t < p.end) result.emplace_back(p.job, p.machine);
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return result;
}

Rat processed_amount(const Schedule& schedule, int job) {
  Rat total(0);
  for (const Piece& p : schedule.pieces()) {
    if (p.job == job) total += p.end - p.start;
  }
  return total;
}

Rat evaluate(const Instance& instance, const Schedule& schedule,
             const Criterion& criterion) {
  const int n = instance.n();
  for (const Job& j : instance.jobs()) {
    Rat done = processed_amount(schedule, j.id);
    if (done != j.processing) {
      throw Error(Errc::kIncompleteSchedule,
                  "job " + std::to_string(j.id) + " has " + done.str() +
                      " of " + j.processing.str() + " units scheduled");
    }
  }
  std::vector<Rat> completion;
  completion.reserve(n);
  for (const Job& j : instance.jobs()) {
    completion.push_back(completion_time(schedule, j.id));
  }

  switch (criterion.kind) {
    case CriterionKind::kSum:
    case CriterionKind::kMax: {
      if (static_cast<int>(criterion.per_job.size()) != n) {
        throw Error(Errc::kInvalidArgument,
                    "criterion needs one function per job");
      }
      Rat acc = criterion.per_job[0].value(completion[0]);
      for (int i = 1; i < n; ++i) {
        Rat v = criterion.per_job[i].value(completion[i]);
        if (criterion.kind == CriterionKind::kSum) {
          acc += v;
        } else if (acc < v) {
          acc = v;
        }
      }
      return acc;
    }
    case CriterionKind::kWeightedLateCommonDue: {
      if (!criterion.common_due) {
        throw Error(Errc::kInvalidArgument,
                    "late-jobs criterion needs a common due date");
      }
      Rat total(0);
      for (const Job& j : instance.jobs()) {
        if (!j.weight) {
          throw Error(Errc::kInvalidArgument,
                      "late-jobs criterion needs a weight on job " +
                          std::to_string(j.id));
        }
        if (completion[j.id - 1] > *criterion.common_due) total += *j.weight;
      }
      return total;
    }
  }
  throw Error(Errc::kInternalError, "unhandled criterion kind");
}

}  // namespace pfsched

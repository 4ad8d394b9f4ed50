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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfsched/model.hpp"

using pfsched::Criterion;
using pfsched::criterion_cmax;
using pfsched::criterion_sum_completion;
using pfsched::Errc;
using pfsched::Error;
using pfsched::Instance;
using pfsched::Job;
using pfsched::Piece;
using pfsched::PiecewiseLinearFn;
using pfsched::Rat;
using pfsched::Schedule;

namespace {

Job job(int id, Rat release, Rat processing) {
  return Job{id, std::move(release), std::move(processing), std::nullopt,
             std::nullopt};
}

}  // namespace

TEST_CASE("instance construction checks its data") {
  CHECK_THROWS_AS(Instance(0, {job(1, Rat(0), Rat(1))}), Error);
  CHECK_THROWS_AS(Instance(1, {}), Error);
  CHECK_THROWS_AS(Instance(1, {job(2, Rat(0), Rat(1))}), Error);  // id gap
  CHECK_THROWS_AS(Instance(1, {job(1, Rat(0), Rat(0))}), Error);  // p = 0
  CHECK_THROWS_AS(Instance(1, {job(1, Rat(-1), Rat(1))}), Error);

  Instance ok(2, {job(1, Rat(0), Rat(3)), job(2, Rat(1), Rat(2))});
  CHECK(ok.n() == 2);
  CHECK(ok.machines() == 2);
  CHECK(ok.job(2).processing == Rat(2));
  CHECK_THROWS_AS(ok.job(3), Error);
}

TEST_CASE("piecewise function evaluation") {
  // breakpoints {2, 4}, f(0) = 1, slopes {0, 1, 3}
  PiecewiseLinearFn f({Rat(2), Rat(4)}, Rat(1), {Rat(0), Rat(1), Rat(3)});
  CHECK(f.value(Rat(0)) == Rat(1));
  CHECK(f.value(Rat(2)) == Rat(1));
  CHECK(f.value(Rat(3)) == Rat(2));
  CHECK(f.value(Rat(4)) == Rat(3));
  CHECK(f.value(Rat(5)) == Rat(6));
  CHECK(f.value(Rat(9, 2)) == Rat(9, 2));
  CHECK_THROWS_AS(f.value(Rat(-1)), Error);
}

TEST_CASE("piecewise function segment lines") {
  PiecewiseLinearFn f({Rat(2), Rat(4)}, Rat(1), {Rat(0), Rat(1), Rat(3)});
  auto [a0, b0] = f.segment_line(0);
  auto [a1, b1] = f.segment_line(1);
  auto [a2, b2] = f.segment_line(2);
  CHECK(a0 == Rat(0));
  CHECK(b0 == Rat(1));
  CHECK(a1 == Rat(1));
  CHECK(b1 == Rat(-1));
  CHECK(a2 == Rat(3));
  CHECK(b2 == Rat(-9));
  // Convexity: f is the max of its segment lines.
  for (int t = 0; t <= 6; ++t) {
    Rat expect = f.value(Rat(t));
    Rat best = a0 * Rat(t) + b0;
    best = rat_max(best, a1 * Rat(t) + b1);
    best = rat_max(best, a2 * Rat(t) + b2);
    CHECK(best == expect);
  }
  CHECK_THROWS_AS(f.segment_line(3), Error);
}

TEST_CASE("piecewise function shape is validated") {
  CHECK_THROWS_AS(PiecewiseLinearFn({Rat(1)}, Rat(0), {Rat(1)}), Error);
  CHECK_THROWS_AS(PiecewiseLinearFn({Rat(0)}, Rat(0), {Rat(0), Rat(1)}), Error);
  CHECK_THROWS_AS(PiecewiseLinearFn({Rat(2), Rat(2)}, Rat(0),
                                    {Rat(0), Rat(1), Rat(2)}),
                  Error);
  CHECK_THROWS_AS(PiecewiseLinearFn({}, Rat(0), {Rat(-1)}), Error);
  CHECK_THROWS_AS(PiecewiseLinearFn({Rat(1)}, Rat(0), {Rat(2), Rat(1)}), Error);
  CHECK(PiecewiseLinearFn::identity().value(Rat(7)) == Rat(7));
}

TEST_CASE("criterion factories") {
  std::vector<Job> jobs = {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(3))};
  jobs[0].due = Rat(4);
  jobs[0].weight = Rat(2);
  jobs[1].due = Rat(0);
  jobs[1].weight = Rat(5);
  Instance inst(1, jobs);

  Criterion tard = criterion_weighted_tardiness(inst);
  CHECK(tard.per_job[0].value(Rat(3)) == Rat(0));
  CHECK(tard.per_job[0].value(Rat(6)) == Rat(4));   // 2 * (6 - 4)
  CHECK(tard.per_job[1].value(Rat(3)) == Rat(15));  // 5 * (3 - 0)

  Criterion lmax = criterion_lmax(inst);
  CHECK(lmax.per_job[0].value(Rat(1)) == Rat(-3));
  CHECK(lmax.per_job[1].value(Rat(1)) == Rat(1));

  Instance bare(1, {job(1, Rat(0), Rat(2))});
  CHECK_THROWS_AS(criterion_weighted_tardiness(bare), Error);
  CHECK_THROWS_AS(criterion_lmax(bare), Error);
}

TEST_CASE("schedule canonical form") {
  // Unsorted input with an abutting split and a zero-length piece.
  Schedule s({{2, 1, Rat(3), Rat(4)},
              {1, 1, Rat(0), Rat(2)},
              {1, 1, Rat(2), Rat(3)},
              {1, 2, Rat(5), Rat(5)}});
  REQUIRE(s.pieces().size() == 2);
  CHECK(s.pieces()[0].job == 1);
  CHECK(s.pieces()[0].start == Rat(0));
  CHECK(s.pieces()[0].end == Rat(3));  // merged
  CHECK(s.pieces()[1].job == 2);

  CHECK_THROWS_AS(Schedule({{0, 1, Rat(0), Rat(1)}}), Error);
  CHECK_THROWS_AS(Schedule({{1, 0, Rat(0), Rat(1)}}), Error);
  CHECK_THROWS_AS(Schedule({{1, 1, Rat(2), Rat(1)}}), Error);
}

TEST_CASE("completion time and processed amount") {
  Schedule s({{1, 1, Rat(0), Rat(1)},
              {1, 2, Rat(2), Rat(3)},
              {2, 1, Rat(1), Rat(3)}});
  CHECK(completion_time(s, 1) == Rat(3));
  CHECK(completion_time(s, 2) == Rat(3));
  CHECK_THROWS_AS(completion_time(s, 5), Error);
  CHECK(processed_amount(s, 1) == Rat(2));
  CHECK(processed_amount(s, 2) == Rat(2));
  CHECK(processed_amount(s, 5) == Rat(0));

  auto at = jobs_processed_at(s, Rat(2));
  REQUIRE(at.size() == 2);
  CHECK(at[0] == std::pair<int, int>{2, 1});
  CHECK(at[1] == std::pair<int, int>{1, 2});
  CHECK(jobs_processed_at(s, Rat(3)).empty());
  CHECK_THROWS_AS(jobs_processed_at(s, Rat(-1)), Error);
}

TEST_CASE("evaluate sum of completion times") {
  // Two machines, processing 1, 2, 3, shortest first: completions 1, 2, 4.
  Instance inst(2, {job(1, Rat(0), Rat(1)), job(2, Rat(0), Rat(2)),
                    job(3, Rat(0), Rat(3))});
  Schedule s({{1, 1, Rat(0), Rat(1)},
              {2, 2, Rat(0), Rat(2)},
              {3, 1, Rat(1), Rat(4)}});
  CHECK(evaluate(inst, s, criterion_sum_completion(3)) == Rat(7));
  CHECK(evaluate(inst, s, criterion_cmax(3)) == Rat(4));
}

TEST_CASE("evaluate weighted late jobs against a common due date") {
  std::vector<Job> jobs = {job(1, Rat(0), Rat(1)), job(2, Rat(0), Rat(2))};
  jobs[0].weight = Rat(4);
  jobs[1].weight = Rat(3);
  Instance inst(1, jobs);
  Schedule s({{1, 1, Rat(0), Rat(1)}, {2, 1, Rat(1), Rat(3)}});
  CHECK(evaluate(inst, s, criterion_weighted_late_common_due(Rat(1))) ==
        Rat(3));
  CHECK(evaluate(inst, s, criterion_weighted_late_common_due(Rat(3))) ==
        Rat(0));
  CHECK(evaluate(inst, s, criterion_weighted_late_common_due(Rat(0))) ==
        Rat(7));
}

TEST_CASE("evaluate rejects incomplete schedules") {
  Instance inst(1, {job(1, Rat(0), Rat(2))});
  Schedule s({{1, 1, Rat(0), Rat(1)}});
  try {
    evaluate(inst, s, criterion_sum_completion(1));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kIncompleteSchedule);
  }
}

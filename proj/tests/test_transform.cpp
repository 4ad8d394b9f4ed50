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
#include "doctest.h"

#include "pfsched/model.hpp"
#include "pfsched/transform.hpp"
#include "pfsched/validate.hpp"

using pfsched::Errc;
using pfsched::Error;
using pfsched::Instance;
using pfsched::Job;
using pfsched::MakePfsStats;
using pfsched::Piece;
using pfsched::Rat;
using pfsched::Schedule;
using pfsched::completion_time;
using pfsched::exchange_pair;
using pfsched::left_shift_normalize;
using pfsched::make_pfs;
using pfsched::vertical_order;

namespace {

Job job(int id, const Rat& r, const Rat& p) {
  Job j;
  j.id = id;
  j.release = r;
  j.processing = p;
  return j;
}

bool same_pieces(const Schedule& s, const std::vector<Piece>& want) {
  const auto& got = s.pieces();
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    if (got[i].job != want[i].job || got[i].machine != want[i].machine ||
        got[i].start != want[i].start || got[i].end != want[i].end) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("left shift pulls a lone late piece to the release date") {
  Instance inst(1, {job(1, Rat(0), Rat(1))});
  Schedule s({{1, 1, Rat(2), Rat(3)}});
  Schedule out = left_shift_normalize(inst, s);
  CHECK(same_pieces(out, {{1, 1, Rat(0), Rat(1)}}));
  CHECK(pfsched::is_non_delay(inst, out).ok());
}

TEST_CASE("left shift respects release dates") {
  Instance inst(1, {job(1, Rat(2), Rat(1))});
  Schedule s({{1, 1, Rat(5), Rat(6)}});
  Schedule out = left_shift_normalize(inst, s);
  CHECK(same_pieces(out, {{1, 1, Rat(2), Rat(3)}}));
}

TEST_CASE("left shift closes an interior gap piecemeal") {
  Instance inst(1, {job(1, Rat(0), Rat(2))});
  Schedule s({{1, 1, Rat(0), Rat(1)}, {1, 1, Rat(3), Rat(4)}});
  Schedule out = left_shift_normalize(inst, s);
  CHECK(same_pieces(out, {{1, 1, Rat(0), Rat(2)}}));
}

TEST_CASE("left shift fills both machines of an idle prefix") {
  Instance inst(2, {job(1, Rat(0), Rat(1)), job(2, Rat(0), Rat(1))});
  Schedule s({{1, 1, Rat(1), Rat(2)}, {2, 2, Rat(2), Rat(3)}});
  Schedule out = left_shift_normalize(inst, s);
  CHECK(completion_time(out, 1) == Rat(1));
  CHECK(completion_time(out, 2) == Rat(1));
  CHECK(pfsched::is_non_delay(inst, out).ok());
}

TEST_CASE("left shift keeps a non-delay schedule unchanged") {
  Instance inst(2, {job(1, Rat(0), Rat(2)), job(2, Rat(1), Rat(1))});
  Schedule s({{1, 1, Rat(0), Rat(2)}, {2, 2, Rat(1), Rat(2)}});
  Schedule out = left_shift_normalize(inst, s);
  CHECK(same_pieces(out, s.pieces()));
}

TEST_CASE("left shift never delays completions") {
  Instance inst(2, {job(1, Rat(0), Rat(3)), job(2, Rat(1), Rat(2)),
                    job(3, Rat(1), Rat(1))});
  Schedule s({{1, 1, Rat(0), Rat(1)},
              {1, 1, Rat(2), Rat(4)},
              {2, 2, Rat(2), Rat(4)},
              {3, 1, Rat(4), Rat(5)}});
  Schedule out = left_shift_normalize(inst, s);
  for (int id = 1; id <= 3; ++id) {
    CHECK(completion_time(out, id) <= completion_time(s, id));
  }
  CHECK(pfsched::is_non_delay(inst, out).ok());
}

TEST_CASE("vertical order restacks jobs by index") {
  Instance inst(2, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(2))});
  Schedule s({{1, 2, Rat(0), Rat(2)}, {2, 1, Rat(0), Rat(2)}});
  Schedule out = vertical_order(inst, s);
  CHECK(same_pieces(out, {{1, 1, Rat(0), Rat(2)}, {2, 2, Rat(0), Rat(2)}}));
  CHECK(pfsched::is_vertically_ordered(inst, out).ok());
}

TEST_CASE("vertical order follows an explicit ranking") {
  Instance inst(2, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(2))});
  Schedule s({{1, 2, Rat(0), Rat(2)}, {2, 1, Rat(0), Rat(2)}});
  std::vector<int> order{2, 1};
  Schedule out = vertical_order(inst, s, &order);
  CHECK(same_pieces(out, s.pieces()));
  CHECK(pfsched::is_vertically_ordered(inst, out, &order).ok());
}

TEST_CASE("vertical order is idempotent") {
  Instance inst(3, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(3)),
                    job(3, Rat(1), Rat(1))});
  Schedule s({{1, 3, Rat(0), Rat(2)},
              {2, 1, Rat(0), Rat(3)},
              {3, 2, Rat(1), Rat(2)}});
  Schedule once = vertical_order(inst, s);
  Schedule twice = vertical_order(inst, once);
  CHECK(same_pieces(twice, once.pieces()));
}

TEST_CASE("vertical order rejects a bad permutation") {
  Instance inst(2, {job(1, Rat(0), Rat(1)), job(2, Rat(0), Rat(1))});
  Schedule s({{1, 1, Rat(0), Rat(1)}, {2, 2, Rat(0), Rat(1)}});
  std::vector<int> dup{1, 1};
  CHECK_THROWS_AS(vertical_order(inst, s, &dup), Error);
  std::vector<int> shortperm{1};
  CHECK_THROWS_AS(vertical_order(inst, s, &shortperm), Error);
}

TEST_CASE("conversion keeps an already conforming schedule") {
  // Staircase: job sequence (1, 2, 3) on both machines.
  Instance inst(2, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(3)),
                    job(3, Rat(0), Rat(4))});
  Schedule s({{1, 1, Rat(0), Rat(2)},
              {2, 1, Rat(2), Rat(4)},
              {2, 2, Rat(0), Rat(1)},
              {3, 2, Rat(1), Rat(4)},
              {3, 1, Rat(4), Rat(5)}});
  REQUIRE(pfsched::is_pfs_like(inst, s).ok());
  MakePfsStats stats;
  Schedule out = make_pfs(inst, s, nullptr, &stats);
  CHECK(stats.exchanges == 0);
  CHECK(pfsched::is_pfs_like(inst, out).ok());
}

TEST_CASE("conversion repairs a crossed two-machine schedule") {
  Instance inst(2, {job(1, Rat(0), Rat(1)), job(2, Rat(0), Rat(2)),
                    job(3, Rat(0), Rat(3))});
  // Vertically ordered and non-delay, completions (2, 2, 4), but machine
  // sequences are (2, 1, 3) and (3, 2).
  Schedule s({{2, 1, Rat(0), Rat(1)},
              {1, 1, Rat(1), Rat(2)},
              {3, 1, Rat(2), Rat(4)},
              {3, 2, Rat(0), Rat(1)},
              {2, 2, Rat(1), Rat(2)}});
  REQUIRE(pfsched::check_feasible(inst, s).ok());
  REQUIRE(pfsched::is_non_delay(inst, s).ok());
  REQUIRE(pfsched::is_vertically_ordered(inst, s).ok());
  REQUIRE_FALSE(pfsched::is_pfs_like(inst, s).ok());

  MakePfsStats stats;
  Schedule out = make_pfs(inst, s, nullptr, &stats);
  CHECK(stats.exchanges == 1);
  CHECK(same_pieces(out, {{1, 1, Rat(0), Rat(1)},
                          {2, 1, Rat(1), Rat(2)},
                          {3, 1, Rat(2), Rat(4)},
                          {2, 2, Rat(0), Rat(1)},
                          {3, 2, Rat(1), Rat(2)}}));
  CHECK(pfsched::is_pfs_like(inst, out).ok());
  CHECK(pfsched::is_non_delay(inst, out).ok());
  for (int id = 1; id <= 3; ++id) {
    CHECK(completion_time(out, id) <= completion_time(s, id));
  }
}

TEST_CASE("conversion requires releases ordered along the ranking") {
  Instance inst(1, {job(1, Rat(0), Rat(1)), job(2, Rat(1), Rat(1))});
  Schedule s({{1, 1, Rat(0), Rat(1)}, {2, 1, Rat(1), Rat(2)}});
  std::vector<int> order{2, 1};
  try {
    make_pfs(inst, s, &order);
    FAIL("expected an order hypothesis error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kOrderHypothesisViolated);
  }
}

TEST_CASE("conversion requires completions ordered along the ranking") {
  Instance inst(1, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(1))});
  Schedule s({{2, 1, Rat(0), Rat(1)}, {1, 1, Rat(1), Rat(3)}});
  try {
    make_pfs(inst, s);
    FAIL("expected an order hypothesis error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kOrderHypothesisViolated);
  }
}

TEST_CASE("conversion accepts a reversed ranking when completions match") {
  Instance inst(1, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(1))});
  Schedule s({{2, 1, Rat(0), Rat(1)}, {1, 1, Rat(1), Rat(3)}});
  std::vector<int> order{2, 1};
  Schedule out = make_pfs(inst, s, &order);
  CHECK(same_pieces(out, s.pieces()));
  CHECK(pfsched::is_pfs_like(inst, out, &order).ok());
}

TEST_CASE("pair exchange swaps completions on one machine") {
  Instance inst(2, {job(1, Rat(0), Rat(3)), job(2, Rat(1), Rat(3))});
  Schedule s({{1, 1, Rat(0), Rat(1)},
              {2, 1, Rat(1), Rat(4)},
              {1, 1, Rat(4), Rat(6)}});
  REQUIRE(completion_time(s, 1) == Rat(6));
  REQUIRE(completion_time(s, 2) == Rat(4));
  Schedule out = exchange_pair(inst, s, 1, 2);
  CHECK(same_pieces(out, {{1, 1, Rat(0), Rat(3)}, {2, 1, Rat(3), Rat(6)}}));
  CHECK(completion_time(out, 2) == Rat(6));
  CHECK(completion_time(out, 1) == Rat(3));
}

TEST_CASE("pair exchange keeps overlapping work in place") {
  Instance inst(2, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(4))});
  Schedule s({{2, 1, Rat(0), Rat(4)},
              {1, 2, Rat(0), Rat(1)},
              {1, 2, Rat(4), Rat(5)}});
  REQUIRE(completion_time(s, 1) == Rat(5));
  REQUIRE(completion_time(s, 2) == Rat(4));
  Schedule out = exchange_pair(inst, s, 1, 2);
  CHECK(same_pieces(out, {{2, 1, Rat(0), Rat(1)},
                          {1, 1, Rat(1), Rat(2)},
                          {2, 1, Rat(2), Rat(4)},
                          {1, 2, Rat(0), Rat(1)},
                          {2, 2, Rat(4), Rat(5)}}));
  CHECK(completion_time(out, 2) == Rat(5));
  CHECK(completion_time(out, 1) <= Rat(4));
}

TEST_CASE("pair exchange validates its preconditions") {
  Instance inst(1, {job(1, Rat(0), Rat(2)), job(2, Rat(0), Rat(2))});
  Schedule s({{2, 1, Rat(0), Rat(2)}, {1, 1, Rat(2), Rat(4)}});

  SUBCASE("jobs must be given in index order") {
    try {
      exchange_pair(inst, s, 2, 1);
      FAIL("expected a precondition error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kPreconditionViolated);
    }
  }
  SUBCASE("the earlier job must finish later") {
    Schedule fine({{1, 1, Rat(0), Rat(2)}, {2, 1, Rat(2), Rat(4)}});
    try {
      exchange_pair(inst, fine, 1, 2);
      FAIL("expected a precondition error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kPreconditionViolated);
    }
  }
}

TEST_CASE("pair exchange rejects mismatched release or processing order") {
  Instance later_release(1, {job(1, Rat(1), Rat(2)), job(2, Rat(0), Rat(2))});
  Schedule s1({{2, 1, Rat(0), Rat(2)}, {1, 1, Rat(2), Rat(4)}});
  try {
    exchange_pair(later_release, s1, 1, 2);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kPreconditionViolated);
  }

  Instance longer_first(1, {job(1, Rat(0), Rat(3)), job(2, Rat(0), Rat(2))});
  Schedule s2({{2, 1, Rat(0), Rat(2)}, {1, 1, Rat(2), Rat(5)}});
  try {
    exchange_pair(longer_first, s2, 1, 2);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kPreconditionViolated);
  }
}

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

#include <string>

#include "pfsched/io.hpp"

using pfsched::Criterion;
using pfsched::CriterionKind;
using pfsched::Errc;
using pfsched::Error;
using pfsched::Instance;
using pfsched::InstanceDocument;
using pfsched::Job;
using pfsched::Piece;
using pfsched::Rat;
using pfsched::Schedule;
using pfsched::ScheduleDocument;

namespace {

const char* kBasicInstance = R"({
  "machines": 2,
  "jobs": [
    {"id": 1, "release": 0, "processing": "7/2"},
    {"id": 2, "release": "1/2", "processing": 2}
  ],
  "criterion": {"kind": "sum", "functions": "sum_cj"}
})";

void check_invalid(const std::string& text) {
  try {
    pfsched::parse_instance_document(text);
    FAIL("expected an error for: " << text);
  } catch (const Error&) {
  }
}

}  // namespace

TEST_CASE("instances parse with exact rationals") {
  InstanceDocument doc = pfsched::parse_instance_document(kBasicInstance);
  REQUIRE(doc.instance.n() == 2);
  CHECK(doc.instance.machines() == 2);
  CHECK(doc.instance.job(1).processing == Rat(7) / Rat(2));
  CHECK(doc.instance.job(2).release == Rat(1) / Rat(2));
  CHECK(doc.criterion.kind == CriterionKind::kSum);
  REQUIRE(doc.criterion.per_job.size() == 2);
  CHECK(doc.criterion.per_job[0].value(Rat(3)) == Rat(3));
  REQUIRE(doc.criterion_name.has_value());
  CHECK(*doc.criterion_name == "sum_cj");
}

TEST_CASE("instance rendering is a fixpoint") {
  InstanceDocument doc = pfsched::parse_instance_document(kBasicInstance);
  std::string once = pfsched::render_instance_document(doc);
  std::string twice = pfsched::render_instance_document(
      pfsched::parse_instance_document(once));
  CHECK(once == twice);
  CHECK(once.find("\"7/2\"") != std::string::npos);
  CHECK(once.find("\"sum_cj\"") != std::string::npos);
}

TEST_CASE("weighted tardiness shortcut pulls due dates and weights") {
  std::string text = R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 2, "due": 3, "weight": 5}],
    "criterion": {"kind": "sum", "functions": "sum_wj_tj"}
  })";
  InstanceDocument doc = pfsched::parse_instance_document(text);
  REQUIRE(doc.criterion.per_job.size() == 1);
  // w * max(0, t - d) with w=5, d=3.
  CHECK(doc.criterion.per_job[0].value(Rat(3)) == Rat(0));
  CHECK(doc.criterion.per_job[0].value(Rat(5)) == Rat(10));
}

TEST_CASE("largest lateness shortcut uses the max kind") {
  std::string text = R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 2, "due": 3}],
    "criterion": {"kind": "max", "functions": "lmax"}
  })";
  InstanceDocument doc = pfsched::parse_instance_document(text);
  CHECK(doc.criterion.kind == CriterionKind::kMax);
  CHECK(doc.criterion.per_job[0].value(Rat(0)) == Rat(-3));
}

TEST_CASE("late-jobs criterion needs its common due date") {
  std::string good = R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 2, "weight": 1}],
    "criterion": {"kind": "wulj", "common_due": "5/2"}
  })";
  InstanceDocument doc = pfsched::parse_instance_document(good);
  CHECK(doc.criterion.kind == CriterionKind::kWeightedLateCommonDue);
  CHECK(*doc.criterion.common_due == Rat(5) / Rat(2));
  std::string rendered = pfsched::render_instance_document(doc);
  CHECK(rendered ==
        pfsched::render_instance_document(
            pfsched::parse_instance_document(rendered)));
  check_invalid(R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 2, "weight": 1}],
    "criterion": {"kind": "wulj"}
  })");
}

TEST_CASE("explicit function arrays round-trip") {
  std::string text = R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 1}],
    "criterion": {"kind": "sum", "functions": [
      {"breakpoints": [2, "5/2"], "initial": -1, "slopes": [0, 1, 3]}
    ]}
  })";
  InstanceDocument doc = pfsched::parse_instance_document(text);
  REQUIRE(doc.criterion.per_job.size() == 1);
  CHECK_FALSE(doc.criterion_name.has_value());
  CHECK(doc.criterion.per_job[0].value(Rat(2)) == Rat(-1));
  CHECK(doc.criterion.per_job[0].value(Rat(3)) == Rat(1));
  std::string rendered = pfsched::render_instance_document(doc);
  CHECK(rendered ==
        pfsched::render_instance_document(
            pfsched::parse_instance_document(rendered)));
}

TEST_CASE("malformed instance documents are rejected") {
  check_invalid("not json");
  check_invalid(R"({"machines": 1})");
  check_invalid(R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0.5, "processing": 1}],
    "criterion": {"kind": "sum", "functions": "sum_cj"}
  })");
  check_invalid(R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 1}],
    "criterion": {"kind": "max", "functions": "sum_cj"}
  })");
  check_invalid(R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 1}],
    "criterion": {"kind": "sum", "functions": "nope"}
  })");
  check_invalid(R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 1}],
    "criterion": {"kind": "sum", "functions": [], "common_due": 1}
  })");
  check_invalid(R"({
    "machines": 1,
    "jobs": [{"id": 1, "release": 0, "processing": 1}],
    "criterion": {"kind": "sum", "functions": []}
  })");
}

TEST_CASE("schedule documents round-trip byte for byte") {
  ScheduleDocument doc{
      Schedule({Piece{1, 1, Rat(0), Rat(7) / Rat(2)},
                Piece{2, 2, Rat(1) / Rat(2), Rat(2)}}),
      Rat(11) / Rat(2),
      std::vector<int>{1, 2},
      std::string("NO_RELEASE")};
  std::string rendered = pfsched::render_schedule_document(doc);
  ScheduleDocument back = pfsched::parse_schedule_document(rendered);
  CHECK(pfsched::render_schedule_document(back) == rendered);
  CHECK(back.schedule.pieces().size() == 2);
  CHECK(*back.value == Rat(11) / Rat(2));
  CHECK(*back.order == std::vector<int>{1, 2});
  CHECK(*back.certificate == "NO_RELEASE");
  CHECK(rendered.find("\"value\": \"11/2\"") != std::string::npos);
}

TEST_CASE("schedule extras are optional") {
  ScheduleDocument doc =
      pfsched::parse_schedule_document(R"({"pieces": []})");
  CHECK(doc.schedule.pieces().empty());
  CHECK_FALSE(doc.value.has_value());
  CHECK_FALSE(doc.order.has_value());
  CHECK_FALSE(doc.certificate.has_value());
}

TEST_CASE("malformed schedule documents are rejected") {
  CHECK_THROWS_AS(pfsched::parse_schedule_document("[1,2]"), Error);
  CHECK_THROWS_AS(
      pfsched::parse_schedule_document(R"({"pieces": [{"job": 1}]})"), Error);
  CHECK_THROWS_AS(pfsched::parse_schedule_document(
                      R"({"pieces": [], "value": 1.25})"),
                  Error);
}

TEST_CASE("gantt output is deterministic and structured") {
  Instance inst(2, {[] {
                      Job j;
                      j.id = 1;
                      j.release = Rat(0);
                      j.processing = Rat(2);
                      return j;
                    }(),
                    [] {
                      Job j;
                      j.id = 2;
                      j.release = Rat(1);
                      j.processing = Rat(2);
                      return j;
                    }()});
  Schedule s({Piece{1, 1, Rat(0), Rat(2)}, Piece{2, 2, Rat(1), Rat(3)}});
  std::string a = pfsched::render_gantt_svg(inst, s);
  std::string b = pfsched::render_gantt_svg(inst, s);
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.find(">M1<") != std::string::npos);
  CHECK(a.find(">M2<") != std::string::npos);
  CHECK(a.find("stroke-dasharray") != std::string::npos);

  Schedule empty(std::vector<Piece>{});
  std::string axes_only = pfsched::render_gantt_svg(inst, empty);
  CHECK(axes_only.find(">M2<") != std::string::npos);
  CHECK(axes_only.find("text-anchor=\"middle\" fill=\"#ffffff\"") ==
        std::string::npos);
}

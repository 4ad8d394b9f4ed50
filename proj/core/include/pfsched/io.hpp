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

#ifndef PFSCHED_IO_HPP_
#define PFSCHED_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pfsched/model.hpp"

// JSON documents for instances and schedules, plus an SVG Gantt renderer.
// Rationals serialize as JSON integers when integral and as "a/b" strings
// otherwise, so every round trip is exact.

namespace pfsched {

struct InstanceDocument {
  Instance instance;
  Criterion criterion;
  // Set when the document used a named criterion ("sum_cj", "sum_wj_tj",
  // "lmax", "cmax") instead of explicit cost functions; rendering then
  // keeps the name.
  std::optional<std::string> criterion_name;
};

// Expands a named criterion against the instance's job data. Accepts
// "sum_cj", "sum_wj_tj", "lmax", "cmax", and "wulj" (which needs
// common_due). Throws kIoError for unknown names or a missing due date.
Criterion criterion_by_name(const std::string& name, const Instance& instance,
                            const std::optional<Rat>& common_due);

// Throws kIoError on malformed JSON or document structure; model-level
// validation errors (bad ids, negative lengths, non-convex functions)
// propagate from the constructors.
InstanceDocument parse_instance_document(const std::string& text);
std::string render_instance_document(const InstanceDocument& doc);

struct ScheduleDocument {
  Schedule schedule;
  std::optional<Rat> value;
  std::optional<std::vector<int>> order;
  std::optional<std::string> certificate;
};

ScheduleDocument parse_schedule_document(const std::string& text);
std::string render_schedule_document(const ScheduleDocument& doc);

// Deterministic SVG 1.1 Gantt chart: one band per machine with machine 1 on
// top, one labeled rectangle per piece, a time axis over the schedule's
// event points, and a dashed marker per distinct release date.
std::string render_gantt_svg(const Instance& instance,
                             const Schedule& schedule);

}  // namespace pfsched

#endif  // PFSCHED_IO_HPP_

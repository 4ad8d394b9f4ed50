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
// Schedule predicates. All are decided at event points (piece endpoints and
// release dates); between consecutive events the running set is constant, so
// nothing can change there.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfsched/model.hpp"

namespace pfsched {

enum class ViolationKind {
  kBadJob,            // piece references a job id outside 1..n
  kBadMachine,        // piece references a machine outside 1..m
  kMachineOverlap,    // two pieces overlap on one machine
  kJobParallel,       // one job runs on two machines at once
  kReleaseViolated,   // piece starts before its job's release date
  kIncompleteWork,    // a job's pieces do not sum to its processing time
  kDelay,             // a later fragment could run in an idle interval
  kVerticalOrder,     // concurrent jobs not stacked on the lowest machines
  kPieceMultiplicity, // more than one piece of a job on one machine
  kSequenceConflict,  // machine job sequences admit no common total order
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> jobs;
  std::optional<Rat> from;
  std::optional<Rat> to;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(ViolationKind kind, std::vector<int> jobs, std::optional<Rat> from,
           std::optional<Rat> to, std::string message);
};

// Machine exclusivity, no job on two machines at once, release dates
// respected, and piece ids in range.
ValidationReport check_feasible(const Instance& instance,
                                const Schedule& schedule);

// No permissible left shift exists: whenever a machine is idle at an event
// point t, no released job that is off at t still has a fragment scheduled
// later. The remaining predicates require a feasible schedule and throw
// kInfeasibleInput otherwise.
ValidationReport is_non_delay(const Instance& instance,
                              const Schedule& schedule);

// At every event point the k running jobs occupy machines M_1..M_k with the
// lowest-numbered job on M_1. When `order` (a permutation of job ids) is
// given, "lowest" means earliest in that order instead of smallest id.
ValidationReport is_vertically_ordered(const Instance& instance,
                                       const Schedule& schedule,
                                       const std::vector<int>* order = nullptr);

// Vertical order, at most one piece per (job, machine), and machine job
// sequences consistent with one common total order (the given one, or any
// one when `order` is null).
ValidationReport is_pfs_like(const Instance& instance, const Schedule& schedule,
                             const std::vector<int>* order = nullptr);

}  // namespace pfsched

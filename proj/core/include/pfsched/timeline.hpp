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

#pragma once

#include <vector>

#include "pfsched/model.hpp"

namespace pfsched {

// Piecewise-constant view of a schedule: time is cut at every piece endpoint
// and release date (plus any extra cut points), and each resulting slice
// records which job runs on which machine. All schedule predicates and
// transformations work on these event points; between two events nothing
// changes.
class Timeline {
 public:
  Timeline(const Instance& instance, const Schedule& schedule,
           const std::vector<Rat>& extra_cuts = {});

  int machines() const { return machines_; }
  int slice_count() const { return static_cast<int>(slices_.size()); }
  const Rat& slice_start(int s) const { return events_[s]; }
  const Rat& slice_end(int s) const { return events_[s + 1]; }
  Rat slice_length(int s) const { return events_[s + 1] - events_[s]; }

  // Job on the machine in slice s, or 0 when idle. Machine is 1-based.
  int job_on(int s, int machine) const { return slices_[s][machine - 1]; }
  void set_job(int s, int machine, int job) { slices_[s][machine - 1] = job; }

  // Machine running the job in slice s, or 0 when the job is not running.
  int machine_of(int s, int job) const;

  // Splits the slice containing t so that t becomes an event point.
  // No-op when t is already an event or outside the covered range.
  void cut_at(const Rat& t);

  // Rebuilds the canonical piece list (adjacent equal assignments fuse).
  Schedule to_schedule() const;

 private:
  int machines_;
  std::vector<Rat> events_;               // sorted, distinct; >= 2 entries
  std::vector<std::vector<int>> slices_;  // [slice][machine-1] = job or 0
};

}  // namespace pfsched

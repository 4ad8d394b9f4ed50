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

#include "pfsched/timeline.hpp"

#include <algorithm>
#include <string>

namespace pfsched {

Timeline::Timeline(const Instance& instance, const Schedule& schedule,
                   const std::vector<Rat>& extra_cuts)
    : machines_(instance.machines()) {
  for (const Piece& p : schedule.pieces()) {
    if (p.machine > machines_) {
      throw Error(Errc::kInfeasibleInput,
                  "piece on machine " + std::to_string(p.machine) +
                      " but instance has " + std::to_string(machines_));
    }
    events_.push_back(p.start);
    events_.push_back(p.end);
  }
  for (const Job& j : instance.jobs()) events_.push_back(j.release);
  for (const Rat& t : extra_cuts) events_.push_back(t);
  std::sort(events_.begin(), events_.end());
  events_.erase(std::unique(events_.begin(), events_.end()), events_.end());

  if (events_.size() >= 2) {
    slices_.assign(events_.size() - 1, std::vector<int>(machines_, 0));
  }
  for (const Piece& p : schedule.pieces()) {
    auto it = std::lower_bound(events_.begin(), events_.end(), p.start);
    int s = static_cast<int>(it - events_.begin());
    while (events_[s] < p.end) {
      int& cell = slices_[s][p.machine - 1];
      if (cell != 0 && cell != p.job) {
        throw Error(Errc::kInfeasibleInput,
                    "machine " + std::to_string(p.machine) +
                        " is double-booked near t=" + events_[s].str());
      }
      cell = p.job;
      ++s;
    }
  }
}

int Timeline::machine_of(int s, int job) const {
  for (int q = 1; q <= machines_; ++q) {
    if (job_on(s, q) == job) return q;
  }
  return 0;
}

void Timeline::cut_at(const Rat& t) {
  if (events_.empty() || t <= events_.front() || t >= events_.back()) return;
  auto it = std::lower_bound(events_.begin(), events_.end(), t);
  if (it != events_.end() && *it == t) return;
  int s = static_cast<int>(it - events_.begin()) - 1;  // slice containing t
  events_.insert(it, t);
  slices_.insert(slices_.begin() + s, slices_[s]);
}

Schedule Timeline::to_schedule() const {
  std::vector<Piece> pieces;
  for (int q = 1; q <= machines_; ++q) {
    int s = 0;
    while (s < slice_count()) {
      int job = job_on(s, q);
      if (job == 0) {
        ++s;
        continue;
      }
      int e = s;
      while (e + 1 < slice_count() && job_on(e + 1, q) == job) ++e;
      pieces.push_back(Piece{job, q, slice_start(s), slice_end(e)});
      s = e + 1;
    }
  }
  return Schedule(std::move(pieces));
}

}  // namespace pfsched

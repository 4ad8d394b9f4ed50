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

#include "pfsched/validate.hpp"

#include <algorithm>
#include <map>

#include "pfsched/timeline.hpp"

namespace pfsched {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadJob: return "bad_job";
    case ViolationKind::kBadMachine: return "bad_machine";
    case ViolationKind::kMachineOverlap: return "machine_overlap";
    case ViolationKind::kJobParallel: return "job_parallel";
    case ViolationKind::kReleaseViolated: return "release_violated";
    case ViolationKind::kIncompleteWork: return "incomplete_work";
    case ViolationKind::kDelay: return "delay";
    case ViolationKind::kVerticalOrder: return "vertical_order";
    case ViolationKind::kPieceMultiplicity: return "piece_multiplicity";
    case ViolationKind::kSequenceConflict: return "sequence_conflict";
  }
  return "unknown";
}

void ValidationReport::add(ViolationKind kind, std::vector<int> jobs,
                           std::optional<Rat> from, std::optional<Rat> to,
                           std::string message) {
  violations.push_back(Violation{kind, std::move(jobs), std::move(from),
                                 std::move(to), std::move(message)});
}

ValidationReport check_feasible(const Instance& instance,
                                const Schedule& schedule) {
  ValidationReport report;
  const int n = instance.n();
  const int m = instance.machines();

  for (const Piece& p : schedule.pieces()) {
    if (p.job < 1 || p.job > n) {
      report.add(ViolationKind::kBadJob, {p.job}, p.start, p.end,
                 "piece references job " + std::to_string(p.job) +
                     " but the instance has jobs 1.." + std::to_string(n));
    }
    if (p.machine < 1 || p.machine > m) {
      report.add(ViolationKind::kBadMachine, {p.job}, p.start, p.end,
                 "piece on machine " + std::to_string(p.machine) +
                     " but the instance has machines 1.." + std::to_string(m));
    }
  }

  // Machine exclusivity. Pieces are sorted by (machine, start).
  const auto& pieces = schedule.pieces();
  for (size_t i = 0; i + 1 < pieces.size(); ++i) {
    const Piece& a = pieces[i];
    const Piece& b = pieces[i + 1];
    if (a.machine == b.machine && b.start < a.end) {
      report.add(ViolationKind::kMachineOverlap, {a.job, b.job}, b.start,
                 rat_min(a.end, b.end),
                 "machine " + std::to_string(a.machine) + " runs jobs " +
                     std::to_string(a.job) + " and " + std::to_string(b.job) +
                     " simultaneously in [" + b.start.str() + ", " +
                     rat_min(a.end, b.end).str() + ")");
    }
  }

  // One machine per job at a time.
  std::map<int, std::vector<Piece>> by_job;
  for (const Piece& p : pieces) by_job[p.job].push_back(p);
  for (auto& [job, list] : by_job) {
    std::sort(list.begin(), list.end(),
              [](const Piece& a, const Piece& b) { return a.start < b.start; });
    for (size_t i = 0; i + 1 < list.size(); ++i) {
      if (list[i + 1].start < list[i].end) {
        report.add(ViolationKind::kJobParallel, {job}, list[i + 1].start,
                   rat_min(list[i].end, list[i + 1].end),
                   "job " + std::to_string(job) + " runs on machines " +
                       std::to_string(list[i].machine) + " and " +
                       std::to_string(list[i + 1].machine) + " at once");
      }
    }
  }

  // Release dates.
  for (const Piece& p : pieces) {
    if (p.job < 1 || p.job > n) continue;
    const Rat& r = instance.job(p.job).release;
    if (p.start < r) {
      report.add(ViolationKind::kReleaseViolated, {p.job}, p.start, p.end,
                 "job " + std::to_string(p.job) + " starts at " +
                     p.start.str() + " before its release " + r.str());
    }
  }

  // Completeness: every job's pieces must sum to its processing time.
  std::vector<Rat> total(n + 1, Rat(0));
  for (const Piece& p : pieces) {
    if (p.job >= 1 && p.job <= n) total[p.job] = total[p.job] + (p.end - p.start);
  }
  for (int id = 1; id <= n; ++id) {
    if (total[id] != instance.job(id).processing) {
      report.add(ViolationKind::kIncompleteWork, {id}, std::nullopt,
                 std::nullopt,
                 "job " + std::to_string(id) + " has " + total[id].str() +
                     " units scheduled but needs " +
                     instance.job(id).processing.str());
    }
  }
  return report;
}

namespace {

void require_feasible(const Instance& instance, const Schedule& schedule) {
  ValidationReport feas = check_feasible(instance, schedule);
  if (!feas.ok()) {
    throw Error(Errc::kInfeasibleInput,
                "schedule is not feasible: " + feas.violations[0].message);
  }
}

// rank[id] = 1-based position of the job in `order`, or the id itself when
// no order is given.
std::vector<int> job_ranks(const Instance& instance,
                           const std::vector<int>* order) {
  const int n = instance.n();
  std::vector<int> rank(n + 1, 0);
  if (order == nullptr) {
    for (int id = 1; id <= n; ++id) rank[id] = id;
    return rank;
  }
  if (static_cast<int>(order->size()) != n) {
    throw Error(Errc::kInvalidArgument, "order must list every job exactly once");
  }
  for (int pos = 0; pos < n; ++pos) {
    int id = (*order)[pos];
    if (id < 1 || id > n || rank[id] != 0) {
      throw Error(Errc::kInvalidArgument,
                  "order is not a permutation of 1.." + std::to_string(n));
    }
    rank[id] = pos + 1;
  }
  return rank;
}

}  // namespace

ValidationReport is_non_delay(const Instance& instance,
                              const Schedule& schedule) {
  require_feasible(instance, schedule);
  ValidationReport report;
  Timeline tl(instance, schedule);
  const int n = instance.n();

  // Last slice in which each job is running.
  std::vector<int> last_running(n + 1, -1);
  for (int s = 0; s < tl.slice_count(); ++s) {
    for (int q = 1; q <= tl.machines(); ++q) {
      int job = tl.job_on(s, q);
      if (job > 0) last_running[job] = s;
    }
  }

  for (int s = 0; s < tl.slice_count(); ++s) {
    int idle_machine = 0;
    for (int q = 1; q <= tl.machines(); ++q) {
      if (tl.job_on(s, q) == 0) {
        idle_machine = q;
        break;
      }
    }
    if (idle_machine == 0) continue;
    const Rat& t = tl.slice_start(s);
    for (int x = 1; x <= n; ++x) {
      if (instance.job(x).release > t) continue;
      if (tl.machine_of(s, x) != 0) continue;
      if (last_running[x] <= s) continue;
      report.add(ViolationKind::kDelay, {x}, t, tl.slice_end(s),
                 "machine " + std::to_string(idle_machine) + " is idle in [" +
                     t.str() + ", " + tl.slice_end(s).str() +
                     ") while a later fragment of released job " +
                     std::to_string(x) + " could run there");
    }
  }
  return report;
}

ValidationReport is_vertically_ordered(const Instance& instance,
                                       const Schedule& schedule,
                                       const std::vector<int>* order) {
  require_feasible(instance, schedule);
  std::vector<int> rank = job_ranks(instance, order);
  ValidationReport report;
  Timeline tl(instance, schedule);

  for (int s = 0; s < tl.slice_count(); ++s) {
    std::vector<std::pair<int, int>> active;  // (rank, machine)
    std::vector<int> job_of_rank(instance.n() + 1, 0);
    for (int q = 1; q <= tl.machines(); ++q) {
      int job = tl.job_on(s, q);
      if (job > 0) {
        active.emplace_back(rank[job], q);
        job_of_rank[rank[job]] = job;
      }
    }
    std::sort(active.begin(), active.end());
    for (size_t i = 0; i < active.size(); ++i) {
      if (active[i].second != static_cast<int>(i) + 1) {
        int job = job_of_rank[active[i].first];
        report.add(ViolationKind::kVerticalOrder, {job}, tl.slice_start(s),
                   tl.slice_end(s),
                   "job " + std::to_string(job) + " runs on machine " +
                       std::to_string(active[i].second) + " in [" +
                       tl.slice_start(s).str() + ", " + tl.slice_end(s).str() +
                       ") but should be on machine " + std::to_string(i + 1));
      }
    }
  }
  return report;
}

ValidationReport is_pfs_like(const Instance& instance, const Schedule& schedule,
                             const std::vector<int>* order) {
  ValidationReport report = is_vertically_ordered(instance, schedule, order);
  const int n = instance.n();

  // At most one piece per (job, machine). The canonical piece list already
  // merges abutting fragments, so duplicates here are genuine revisits.
  std::map<std::pair<int, int>, int> piece_count;
  for (const Piece& p : schedule.pieces()) {
    int c = ++piece_count[{p.job, p.machine}];
    if (c == 2) {
      report.add(ViolationKind::kPieceMultiplicity, {p.job}, std::nullopt,
                 std::nullopt,
                 "job " + std::to_string(p.job) + " visits machine " +
                     std::to_string(p.machine) + " more than once");
    }
  }

  // Per-machine job sequences ordered by piece start.
  std::vector<std::vector<int>> sequence(instance.machines() + 1);
  for (const Piece& p : schedule.pieces()) {
    auto& seq = sequence[p.machine];
    if (seq.empty() || seq.back() != p.job) seq.push_back(p.job);
  }

  if (order != nullptr) {
    std::vector<int> rank = job_ranks(instance, order);
    for (int q = 1; q <= instance.machines(); ++q) {
      const auto& seq = sequence[q];
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        if (rank[seq[i]] >= rank[seq[i + 1]]) {
          report.add(ViolationKind::kSequenceConflict, {seq[i], seq[i + 1]},
                     std::nullopt, std::nullopt,
                     "machine " + std::to_string(q) + " runs job " +
                         std::to_string(seq[i]) + " before job " +
                         std::to_string(seq[i + 1]) +
                         ", against the given order");
        }
      }
    }
    return report;
  }

  // No order given: the machine sequences must admit a common total order,
  // i.e. the union of their precedence pairs must be acyclic.
  std::vector<std::vector<bool>> prec(n + 1, std::vector<bool>(n + 1, false));
  for (int q = 1; q <= instance.machines(); ++q) {
    const auto& seq = sequence[q];
    for (size_t i = 0; i < seq.size(); ++i) {
      for (size_t k = i + 1; k < seq.size(); ++k) {
        if (seq[i] != seq[k]) prec[seq[i]][seq[k]] = true;
      }
    }
  }
  std::vector<int> indegree(n + 1, 0);
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (prec[u][v]) ++indegree[v];
    }
  }
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v = 1; v <= n; ++v) {
      if (prec[u][v] && --indegree[v] == 0) ready.push_back(v);
    }
  }
  if (removed < n) {
    std::vector<int> stuck;
    for (int v = 1; v <= n; ++v) {
      if (indegree[v] > 0) stuck.push_back(v);
    }
    report.add(ViolationKind::kSequenceConflict, stuck, std::nullopt,
               std::nullopt,
               "machine job sequences are cyclic; no common order exists");
  }
  return report;
}

}  // namespace pfsched

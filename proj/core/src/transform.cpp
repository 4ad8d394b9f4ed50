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

#include "pfsched/transform.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "pfsched/timeline.hpp"
#include "pfsched/validate.hpp"

namespace pfsched {

namespace {

void require_feasible(const Instance& instance, const Schedule& schedule) {
  ValidationReport feas = check_feasible(instance, schedule);
  if (!feas.ok()) {
    throw Error(Errc::kInfeasibleInput,
                "schedule is not feasible: " + feas.violations[0].message);
  }
}

// rank[id] = 1-based position in `order` (identity when no order is given).
std::vector<int> job_ranks(const Instance& instance,
                           const std::vector<int>* order) {
  const int n = instance.n();
  std::vector<int> rank(n + 1, 0);
  if (order == nullptr) {
    for (int id = 1; id <= n; ++id) rank[id] = id;
    return rank;
  }
  if (static_cast<int>(order->size()) != n) {
    throw Error(Errc::kInvalidArgument,
                "order must list every job exactly once");
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

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  return order;
}

// End of the job's piece that covers time t.
Rat piece_end_at(const Schedule& schedule, int job, const Rat& t) {
  for (const Piece& p : schedule.pieces()) {
    if (p.job == job && p.start <= t && t < p.end) return p.end;
  }
  throw Error(Errc::kInternalError,
              "job " + std::to_string(job) + " is not running at " + t.str());
}

}  // namespace

Schedule left_shift_normalize(const Instance& instance,
                              const Schedule& schedule) {
  require_feasible(instance, schedule);
  const int n = instance.n();
  Schedule current = schedule;

  // Generous safety cap; each pass moves a positive amount of work strictly
  // earlier, and in practice the loop ends after a handful of passes.
  const int cap =
      10000 + 1000 * static_cast<int>(schedule.pieces().size() + 1);
  for (int iter = 0; ; ++iter) {
    if (iter > cap) {
      throw Error(Errc::kInternalError,
                  "left shift normalization did not converge");
    }
    Timeline tl(instance, current);

    // Earliest idle slice with a released, idle job that still has a later
    // fragment. Pieces never start strictly inside a slice, so the later
    // fragment starts at or after the slice end.
    int fix_slice = -1;
    int fix_machine = 0;
    int fix_job = 0;
    Rat fix_next;  // start of the chosen job's next piece
    for (int s = 0; s < tl.slice_count() && fix_slice < 0; ++s) {
      int idle = 0;
      for (int q = 1; q <= tl.machines(); ++q) {
        if (tl.job_on(s, q) == 0) {
          idle = q;
          break;
        }
      }
      if (idle == 0) continue;
      for (int x = 1; x <= n; ++x) {
        if (instance.job(x).release > tl.slice_start(s)) continue;
        if (tl.machine_of(s, x) != 0) continue;
        std::optional<Rat> next;
        for (const Piece& p : current.pieces()) {
          if (p.job == x && p.start >= tl.slice_end(s)) {
            if (!next || p.start < *next) next = p.start;
          }
        }
        if (!next) continue;
        if (fix_slice < 0 || *next < fix_next) {
          fix_slice = s;
          fix_machine = idle;
          fix_job = x;
          fix_next = *next;
        }
      }
    }
    if (fix_slice < 0) break;

    // Move the head of the job's next piece into the idle interval.
    const Rat u = tl.slice_start(fix_slice);
    const Rat gap = tl.slice_length(fix_slice);
    std::vector<Piece> pieces;
    for (const Piece& p : current.pieces()) {
      if (p.job == fix_job && p.start == fix_next) {
        Rat len = rat_min(gap, p.end - p.start);
        pieces.push_back(Piece{fix_job, fix_machine, u, u + len});
        if (p.start + len < p.end) {
          pieces.push_back(Piece{fix_job, p.machine, p.start + len, p.end});
        }
      } else {
        pieces.push_back(p);
      }
    }
    current = Schedule(std::move(pieces));
  }
  return current;
}

Schedule vertical_order(const Instance& instance, const Schedule& schedule,
                        const std::vector<int>* order) {
  require_feasible(instance, schedule);
  std::vector<int> rank = job_ranks(instance, order);
  Timeline tl(instance, schedule);
  for (int s = 0; s < tl.slice_count(); ++s) {
    std::vector<std::pair<int, int>> active;  // (rank, job)
    for (int q = 1; q <= tl.machines(); ++q) {
      int job = tl.job_on(s, q);
      if (job > 0) active.emplace_back(rank[job], job);
      tl.set_job(s, q, 0);
    }
    std::sort(active.begin(), active.end());
    for (size_t i = 0; i < active.size(); ++i) {
      tl.set_job(s, static_cast<int>(i) + 1, active[i].second);
    }
  }
  return tl.to_schedule();
}

namespace {

// Smallest (start, machine, later-start) triple where a piece of a job
// ranked after `target_rank` starts on a machine that later also starts a
// piece of `job`.
struct SequenceViolation {
  Rat t;        // start of the out-of-order predecessor piece
  int machine;  // machine carrying both pieces
  Rat t_prime;  // start of the target job's later piece on that machine
};

std::optional<SequenceViolation> find_violation(const Schedule& schedule,
                                                const std::vector<int>& rank,
                                                int job, int target_rank) {
  std::optional<SequenceViolation> best;
  // Canonical pieces are sorted by (machine, start).
  const auto& pieces = schedule.pieces();
  for (size_t a = 0; a < pieces.size(); ++a) {
    if (rank[pieces[a].job] <= target_rank) continue;
    for (size_t b = a + 1;
         b < pieces.size() && pieces[b].machine == pieces[a].machine; ++b) {
      if (pieces[b].job != job) continue;
      SequenceViolation v{pieces[a].start, pieces[a].machine, pieces[b].start};
      if (!best || v.t < best->t ||
          (v.t == best->t && v.machine < best->machine)) {
        best = v;
      }
      break;  // earliest later piece of `job` on this machine
    }
  }
  return best;
}

}  // namespace

Schedule make_pfs(const Instance& instance, const Schedule& schedule,
                  const std::vector<int>* order, MakePfsStats* stats) {
  require_feasible(instance, schedule);
  const int n = instance.n();
  std::vector<int> rank = job_ranks(instance, order);
  std::vector<int> perm = order ? *order : identity_order(n);

  for (int i = 0; i + 1 < n; ++i) {
    if (instance.job(perm[i]).release > instance.job(perm[i + 1]).release) {
      throw Error(Errc::kOrderHypothesisViolated,
                  "release dates are not nondecreasing along the ranking: "
                  "jobs " + std::to_string(perm[i]) + ", " +
                      std::to_string(perm[i + 1]));
    }
  }

  std::vector<Rat> input_completion(n + 1, Rat(0));
  for (int id = 1; id <= n; ++id) {
    input_completion[id] = completion_time(schedule, id);
  }

  MakePfsStats local;
  MakePfsStats* st = stats ? stats : &local;
  Schedule cur = vertical_order(
      instance, left_shift_normalize(instance, schedule), order);
  ++st->normalizations;

  for (int i = 0; i + 1 < n; ++i) {
    if (completion_time(cur, perm[i]) > completion_time(cur, perm[i + 1])) {
      throw Error(Errc::kOrderHypothesisViolated,
                  "completion times are not nondecreasing along the ranking: "
                  "jobs " + std::to_string(perm[i]) + ", " +
                      std::to_string(perm[i + 1]));
    }
  }

  for (int jr = 1; jr <= n; ++jr) {
    const int j = perm[jr - 1];
    bool have_last = false;
    Rat last_t;
    int last_machine = 0;
    for (;;) {
      std::optional<SequenceViolation> v = find_violation(cur, rank, j, jr);
      if (!v) break;
      // Each exchange clears the machine in question up to t + delta, so
      // the (time, machine) pair must advance strictly.
      if (have_last &&
          !(last_t < v->t || (last_t == v->t && last_machine < v->machine))) {
        throw Error(Errc::kInternalError,
                    "fragment exchange made no progress at t=" + v->t.str());
      }
      have_last = true;
      last_t = v->t;
      last_machine = v->machine;

      const Rat& t = v->t;
      const Rat& t_prime = v->t_prime;

      // Swap partner: the last-ranked job running at t but not at t'. It
      // must rank after j, and it must have another piece after t'.
      auto at_t = jobs_processed_at(cur, t);
      auto at_tp = jobs_processed_at(cur, t_prime);
      auto runs_at_tp = [&](int x) {
        for (const auto& [jb, mc] : at_tp) {
          if (jb == x) return true;
        }
        return false;
      };
      int l = 0;
      int l_machine = 0;
      for (const auto& [jb, mc] : at_t) {
        if (!runs_at_tp(jb) && (l == 0 || rank[jb] > rank[l])) {
          l = jb;
          l_machine = mc;
        }
      }
      if (l == 0 || rank[l] <= jr) {
        throw Error(Errc::kInternalError,
                    "no swap partner at t=" + t.str() +
                        "; the completion-order hypothesis must have broken");
      }
      std::optional<Rat> t_second;
      for (const Piece& p : cur.pieces()) {
        if (p.job == l && p.start > t_prime) {
          if (!t_second || p.start < *t_second) t_second = p.start;
        }
      }
      if (!t_second) {
        throw Error(Errc::kInternalError,
                    "swap partner " + std::to_string(l) +
                        " has no piece after t'=" + t_prime.str());
      }

      Rat delta = *t_second - t_prime;
      for (const auto& [jb, mc] : at_t) {
        delta = rat_min(delta, piece_end_at(cur, jb, t) - t);
      }
      for (const auto& [jb, mc] : at_tp) {
        delta = rat_min(delta, piece_end_at(cur, jb, t_prime) - t_prime);
      }
      if (delta.sign() <= 0) {
        throw Error(Errc::kInternalError, "nonpositive exchange length");
      }

      // Trade l's fragment [t, t+delta) for j's fragment [t', t'+delta),
      // then restack. Both fragments sit inside single pieces, so the
      // machine is constant across each window.
      Timeline tl(instance, cur);
      tl.cut_at(t);
      tl.cut_at(t + delta);
      tl.cut_at(t_prime);
      tl.cut_at(t_prime + delta);
      for (int s = 0; s < tl.slice_count(); ++s) {
        if (tl.slice_start(s) >= t && tl.slice_end(s) <= t + delta) {
          if (tl.job_on(s, l_machine) != l) {
            throw Error(Errc::kInternalError, "exchange window mismatch");
          }
          tl.set_job(s, l_machine, j);
        }
        if (tl.slice_start(s) >= t_prime &&
            tl.slice_end(s) <= t_prime + delta) {
          if (tl.job_on(s, v->machine) != j) {
            throw Error(Errc::kInternalError, "exchange window mismatch");
          }
          tl.set_job(s, v->machine, l);
        }
      }
      cur = vertical_order(
          instance, left_shift_normalize(instance, tl.to_schedule()), order);
      ++st->exchanges;
      ++st->normalizations;
    }
  }

  if (!is_pfs_like(instance, cur, order).ok() ||
      !is_non_delay(instance, cur).ok()) {
    throw Error(Errc::kInternalError,
                "conversion did not reach the permutation-flow-shop shape");
  }
  // Realized completions are not re-checked against the ranking here: a
  // later-ranked job whose work ends on a higher machine can finish before
  // an earlier-ranked one. The per-machine sequence is the invariant.
  for (int id = 1; id <= n; ++id) {
    if (completion_time(cur, id) > input_completion[id]) {
      throw Error(Errc::kInternalError,
                  "conversion increased a completion time");
    }
  }
  return cur;
}

Schedule exchange_pair(const Instance& instance, const Schedule& schedule,
                       int j, int k) {
  require_feasible(instance, schedule);
  const Job& job_j = instance.job(j);
  const Job& job_k = instance.job(k);
  if (j >= k) {
    throw Error(Errc::kPreconditionViolated,
                "exchange needs j < k, got j=" + std::to_string(j) +
                    ", k=" + std::to_string(k));
  }
  if (job_j.release > job_k.release) {
    throw Error(Errc::kPreconditionViolated,
                "exchange needs r_j <= r_k (" + job_j.release.str() + " > " +
                    job_k.release.str() + ")");
  }
  if (job_j.processing > job_k.processing) {
    throw Error(Errc::kPreconditionViolated,
                "exchange needs p_j <= p_k (" + job_j.processing.str() +
                    " > " + job_k.processing.str() + ")");
  }
  const Rat c_j = completion_time(schedule, j);
  const Rat c_k = completion_time(schedule, k);
  if (!(c_j > c_k)) {
    throw Error(Errc::kPreconditionViolated,
                "exchange needs completion(j) > completion(k) (" + c_j.str() +
                    " <= " + c_k.str() + ")");
  }
  const Rat& r_k = job_k.release;

  std::vector<Piece> result;
  std::vector<Piece> j_pieces;
  std::vector<Piece> k_pieces;
  for (const Piece& p : schedule.pieces()) {
    if (p.job == j) {
      j_pieces.push_back(p);
    } else if (p.job == k) {
      k_pieces.push_back(p);
    } else {
      result.push_back(p);
    }
  }

  // j's work before k's release stays put.
  for (const Piece& p : j_pieces) {
    if (p.end <= r_k) {
      result.push_back(p);
    } else if (p.start < r_k) {
      result.push_back(Piece{j, p.machine, p.start, r_k});
    }
  }

  // Elementary intervals over the union of both jobs' activity from r_k on.
  std::vector<Rat> cuts{r_k};
  for (const Piece& p : j_pieces) {
    if (p.end > r_k) {
      cuts.push_back(rat_max(p.start, r_k));
      cuts.push_back(p.end);
    }
  }
  for (const Piece& p : k_pieces) {
    cuts.push_back(p.start);
    cuts.push_back(p.end);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto machine_at = [](const std::vector<Piece>& pieces, const Rat& t) {
    for (const Piece& p : pieces) {
      if (p.start <= t && t < p.end) return p.machine;
    }
    return 0;
  };

  struct Slot {
    Rat start;
    Rat end;
    int machine;
  };
  std::vector<Slot> free_slots;
  Rat j_rem = job_j.processing;
  Rat k_rem = job_k.processing;
  for (const Piece& p : j_pieces) {
    if (p.start < r_k) j_rem -= rat_min(p.end, r_k) - p.start;
  }
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat& a = cuts[i];
    const Rat& b = cuts[i + 1];
    int mj = machine_at(j_pieces, a);
    int mk = machine_at(k_pieces, a);
    if (mj != 0 && mk != 0) {
      // Both running: keep both in place.
      result.push_back(Piece{j, mj, a, b});
      result.push_back(Piece{k, mk, a, b});
      j_rem -= b - a;
      k_rem -= b - a;
    } else if (mj != 0 || mk != 0) {
      free_slots.push_back(Slot{a, b, mj != 0 ? mj : mk});
    }
  }

  // Fill the free slots in time order: j's remainder first, then k's.
  Rat total_free(0);
  for (const Slot& s : free_slots) total_free += s.end - s.start;
  if (total_free != j_rem + k_rem) {
    throw Error(Errc::kInternalError, "exchange slot accounting is off");
  }
  for (const Slot& s : free_slots) {
    Rat a = s.start;
    Rat len = s.end - s.start;
    if (j_rem.sign() > 0) {
      Rat take = rat_min(j_rem, len);
      result.push_back(Piece{j, s.machine, a, a + take});
      j_rem -= take;
      a += take;
      len -= take;
    }
    if (len.sign() > 0) {
      Rat take = rat_min(k_rem, len);
      result.push_back(Piece{k, s.machine, a, a + take});
      k_rem -= take;
      len -= take;
    }
    if (len.sign() > 0) {
      throw Error(Errc::kInternalError, "exchange left an unfilled slot");
    }
  }

  Schedule out(std::move(result));
  if (!check_feasible(instance, out).ok()) {
    throw Error(Errc::kInternalError, "exchange produced an infeasible schedule");
  }
  if (completion_time(out, k) != c_j || completion_time(out, j) > c_k) {
    throw Error(Errc::kInternalError,
                "exchange missed the intended completion times");
  }
  return out;
}

}  // namespace pfsched

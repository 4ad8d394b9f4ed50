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

#include "pfsched/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "pfsched/pfs_lp.hpp"
#include "pfsched/simplex.hpp"

namespace pfsched {

namespace {

int find_index(const LinearProgram& lp, const std::string& name) {
  const auto& vars = lp.variables();
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) return static_cast<int>(i);
  }
  throw Error(Errc::kInternalError, "program lacks variable " + name);
}

// Work that must run inside [r, d] cannot exceed the machine capacity
// there. A job released before r can burn at most r - r_j of its length
// early, so the rest is forced into the window. This is necessary for
// feasibility by d, not sufficient.
bool deadline_capacity_ok(const std::vector<Job>& jobs, int m, const Rat& d) {
  for (const Job& j : jobs) {
    if (j.release + j.processing > d) return false;
  }
  for (const Job& anchor : jobs) {
    const Rat& r = anchor.release;
    Rat cap = Rat(m) * (d - r);
    Rat demand(0);
    for (const Job& j : jobs) {
      Rat early = r - j.release;
      if (early.sign() < 0) early = Rat(0);
      Rat forced = j.processing - early;
      if (forced.sign() > 0) demand += forced;
    }
    if (demand > cap) return false;
  }
  return true;
}

// Can the given jobs all finish by d? Checked through the fixed-order
// program over the (release, processing) sort with a deadline row per job.
bool subset_fits_deadline(std::vector<Job> jobs, int m, const Rat& d) {
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    if (a.release != b.release) return a.release < b.release;
    if (a.processing != b.processing) return a.processing < b.processing;
    return a.id < b.id;
  });
  const int k = static_cast<int>(jobs.size());
  std::vector<Job> relabeled = jobs;
  for (int i = 0; i < k; ++i) relabeled[i].id = i + 1;
  Instance sub(m, std::move(relabeled));
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i + 1;
  LinearProgram lp = build_lp(sub, order, criterion_sum_completion(k));
  for (int j = 1; j <= k; ++j) {
    std::string tn = "t_" + std::to_string(j) + "_1";
    std::string pn = "p_" + std::to_string(j) + "_1";
    lp.add_constraint(
        {{find_index(lp, tn), Rat(1)}, {find_index(lp, pn), Rat(1)}},
        Rel::kLe, d);
  }
  LpOutcome out = solve(lp);
  if (out.status == LpStatus::kUnbounded) {
    throw Error(Errc::kInternalError, "deadline check came back unbounded");
  }
  bool feasible = out.status == LpStatus::kOptimal;
  if (feasible && !deadline_capacity_ok(jobs, m, d)) {
    throw Error(Errc::kInternalError,
                "a subset passed the program but fails the capacity bound");
  }
  return feasible;
}

}  // namespace

EnumerationResult enumerate_orders_optimum(const Instance& instance,
                                           const Criterion& criterion,
                                           int cap) {
  const int n = instance.n();
  if (n > cap) {
    throw Error(Errc::kTooLarge,
                "n=" + std::to_string(n) + " exceeds the enumeration cap of " +
                    std::to_string(cap));
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::optional<Rat> best;
  std::vector<int> best_perm;
  do {
    LpOutcome out = solve(build_lp(instance, perm, criterion));
    if (out.status != LpStatus::kOptimal) {
      throw Error(Errc::kInternalError,
                  "fixed-order program came back " +
                      std::string(lp_status_name(out.status)));
    }
    if (!best || out.value < *best) {
      best = out.value;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  bool global = true;
  for (const Job& j : instance.jobs()) {
    if (j.release != instance.job(1).release) {
      global = false;
      break;
    }
  }
  if (!global) {
    try {
      OrderCertificate cert = determine_order(instance, criterion);
      global = cert.kind == OrderCase::kAgreeableSum ||
               cert.kind == OrderCase::kAgreeableMax;
    } catch (const Error&) {
      global = false;
    }
  }
  return EnumerationResult{*best, std::move(best_perm), global};
}

Rat mcnaughton_cmax(const Instance& instance) {
  for (const Job& j : instance.jobs()) {
    if (j.release != instance.job(1).release) {
      throw Error(Errc::kPreconditionViolated,
                  "the wrap-around bound needs equal release dates");
    }
  }
  Rat total(0);
  Rat longest(0);
  for (const Job& j : instance.jobs()) {
    total += j.processing;
    longest = rat_max(longest, j.processing);
  }
  return rat_max(longest, total / Rat(instance.machines()));
}

LateJobsResult brute_force_late_jobs(const Instance& instance, const Rat& d,
                                     int cap) {
  const int n = instance.n();
  if (n > cap) {
    throw Error(Errc::kTooLarge,
                "n=" + std::to_string(n) + " exceeds the subset cap of " +
                    std::to_string(cap));
  }
  for (const Job& j : instance.jobs()) {
    if (!j.weight) {
      throw Error(Errc::kInvalidArgument,
                  "job " + std::to_string(j.id) + " needs a weight");
    }
  }

  const unsigned total = 1u << n;
  std::vector<char> feasible(total, 0);
  feasible[0] = 1;
  // Masks grouped by size so every proper submask is classified first;
  // an infeasible submask rules out the superset without touching the
  // program (dropping a job never hurts feasibility).
  std::vector<std::vector<unsigned>> by_size(n + 1);
  for (unsigned mask = 1; mask < total; ++mask) {
    by_size[__builtin_popcount(mask)].push_back(mask);
  }
  for (int size = 1; size <= n; ++size) {
    for (unsigned mask : by_size[size]) {
      bool parents_ok = true;
      for (int b = 0; b < n; ++b) {
        if ((mask >> b & 1u) && !feasible[mask & ~(1u << b)]) {
          parents_ok = false;
          break;
        }
      }
      if (!parents_ok) continue;
      std::vector<Job> subset;
      for (int b = 0; b < n; ++b) {
        if (mask >> b & 1u) subset.push_back(instance.job(b + 1));
      }
      feasible[mask] =
          subset_fits_deadline(std::move(subset), instance.machines(), d);
    }
  }

  std::optional<Rat> best;
  std::vector<int> best_set;
  for (unsigned mask = 0; mask < total; ++mask) {
    if (!feasible[mask]) continue;
    Rat late(0);
    std::vector<int> on_time;
    for (int b = 0; b < n; ++b) {
      if (mask >> b & 1u) {
        on_time.push_back(b + 1);
      } else {
        late += *instance.job(b + 1).weight;
      }
    }
    if (!best || late < *best || (late == *best && on_time < best_set)) {
      best = late;
      best_set = std::move(on_time);
    }
  }
  return LateJobsResult{*best, std::move(best_set)};
}

Instance random_instance(const GeneratorConfig& config) {
  if (config.n < 1 || config.m < 1 || config.max_value < 1) {
    throw Error(Errc::kInvalidArgument,
                "generator needs n >= 1, m >= 1, max_value >= 1");
  }
  std::mt19937_64 rng(config.seed);
  const auto span = static_cast<std::uint64_t>(config.max_value);
  std::vector<Rat> r(config.n), p(config.n), d(config.n), w(config.n);
  for (int i = 0; i < config.n; ++i) {
    r[i] = Rat(static_cast<long>(rng() % (span + 1)));
    p[i] = Rat(static_cast<long>(1 + rng() % span));
    d[i] = Rat(static_cast<long>(rng() % (span + 1)));
    w[i] = Rat(static_cast<long>(1 + rng() % span));
  }
  if (config.agreeable) {
    auto asc = [](const Rat& a, const Rat& b) { return a < b; };
    auto desc = [](const Rat& a, const Rat& b) { return b < a; };
    std::sort(r.begin(), r.end(), asc);
    std::sort(p.begin(), p.end(), asc);
    std::sort(d.begin(), d.end(), asc);
    std::sort(w.begin(), w.end(), desc);
  }
  std::vector<Job> jobs(config.n);
  for (int i = 0; i < config.n; ++i) {
    jobs[i].id = i + 1;
    jobs[i].release = r[i];
    jobs[i].processing = p[i];
    jobs[i].due = d[i];
    jobs[i].weight = w[i];
  }
  return Instance(config.m, std::move(jobs));
}

Schedule random_feasible_schedule(const Instance& instance,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = instance.n();
  const int m = instance.machines();
  std::vector<Rat> rem(n + 1);
  std::vector<int> splits(n + 1, 0);
  for (const Job& j : instance.jobs()) rem[j.id] = j.processing;

  Rat t = instance.job(1).release;
  int left = n;
  for (const Job& j : instance.jobs()) {
    t = rat_min(t, j.release);
    if (j.processing.sign() == 0) --left;
  }

  std::vector<Piece> pieces;
  // Generous bound; every iteration completes a job, consumes a release,
  // or splits a piece, and splits are capped per job.
  int guard = 100 + 30 * n * (m + 1);
  while (left > 0) {
    if (--guard < 0) {
      throw Error(Errc::kInternalError, "schedule generator did not finish");
    }
    std::vector<int> eligible;
    std::optional<Rat> next_release;
    for (const Job& j : instance.jobs()) {
      if (rem[j.id].sign() <= 0) continue;
      if (j.release <= t) {
        eligible.push_back(j.id);
      } else if (!next_release || j.release < *next_release) {
        next_release = j.release;
      }
    }
    if (eligible.empty()) {
      t = *next_release;
      continue;
    }
    for (size_t i = eligible.size(); i > 1; --i) {
      std::swap(eligible[i - 1], eligible[rng() % i]);
    }
    const int k_max = std::min<int>(m, static_cast<int>(eligible.size()));
    const int k = 1 + static_cast<int>(rng() % k_max);
    std::vector<int> machines(m);
    for (int i = 0; i < m; ++i) machines[i] = i + 1;
    for (size_t i = machines.size(); i > 1; --i) {
      std::swap(machines[i - 1], machines[rng() % i]);
    }

    Rat step = rem[eligible[0]];
    bool force_full = false;
    for (int i = 0; i < k; ++i) {
      step = rat_min(step, rem[eligible[i]]);
      if (splits[eligible[i]] >= 3) force_full = true;
    }
    if (next_release) step = rat_min(step, *next_release - t);
    const int q = force_full ? 1 : 1 + static_cast<int>(rng() % 3);
    Rat delta = step / Rat(q);
    for (int i = 0; i < k; ++i) {
      int id = eligible[i];
      pieces.push_back(Piece{id, machines[i], t, t + delta});
      rem[id] -= delta;
      if (rem[id].sign() == 0) {
        --left;
      } else {
        ++splits[id];
      }
    }
    t += delta;
  }
  return Schedule(std::move(pieces));
}

}  // namespace pfsched

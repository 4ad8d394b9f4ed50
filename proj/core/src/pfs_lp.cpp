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

#include "pfsched/pfs_lp.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "pfsched/transform.hpp"
#include "pfsched/validate.hpp"

namespace pfsched {

const char* order_case_name(OrderCase c) {
  switch (c) {
    case OrderCase::kNoRelease:
      return "NO_RELEASE";
    case OrderCase::kAgreeableSum:
      return "AGREEABLE_SUM";
    case OrderCase::kAgreeableMax:
      return "AGREEABLE_MAX";
    case OrderCase::kAgreeableWulj:
      return "AGREEABLE_WULJ";
    case OrderCase::kUserSupplied:
      return "USER_SUPPLIED";
  }
  return "?";
}

namespace {

// Orders with uncertified data are searched exhaustively up to this size.
constexpr int kEnumerationCap = 8;

std::string var_t(int rank, int machine) {
  return "t_" + std::to_string(rank) + "_" + std::to_string(machine);
}
std::string var_p(int rank, int machine) {
  return "p_" + std::to_string(rank) + "_" + std::to_string(machine);
}
std::string var_c(int rank) { return "C_" + std::to_string(rank); }
std::string var_phi(int rank) { return "phi_" + std::to_string(rank); }

void check_permutation(const Instance& instance, const std::vector<int>& order) {
  const int n = instance.n();
  if (static_cast<int>(order.size()) != n) {
    throw Error(Errc::kInvalidArgument,
                "order must list every job exactly once");
  }
  std::vector<char> seen(n + 1, 0);
  for (int id : order) {
    if (id < 1 || id > n || seen[id]) {
      throw Error(Errc::kInvalidArgument,
                  "order is not a permutation of 1.." + std::to_string(n));
    }
    seen[id] = 1;
  }
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  return order;
}

// Index of the segment in force immediately to the right of t.
int segment_at(const PiecewiseLinearFn& f, const Rat& t) {
  int i = 0;
  for (const Rat& b : f.breakpoints()) {
    if (b <= t) {
      ++i;
    } else {
      break;
    }
  }
  return i;
}

int find_var(const LinearProgram& lp, const std::string& name) {
  const auto& vars = lp.variables();
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) return static_cast<int>(i);
  }
  throw Error(Errc::kInternalError, "program lacks variable " + name);
}

}  // namespace

bool check_difference_monotone(const PiecewiseLinearFn& f,
                               const PiecewiseLinearFn& g) {
  std::vector<Rat> points{Rat(0)};
  points.insert(points.end(), f.breakpoints().begin(), f.breakpoints().end());
  points.insert(points.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const Rat& t : points) {
    if (f.slopes()[segment_at(f, t)] < g.slopes()[segment_at(g, t)]) {
      return false;
    }
  }
  return true;
}

bool check_difference_nonnegative(const PiecewiseLinearFn& f,
                                  const PiecewiseLinearFn& g) {
  if (f.value(Rat(0)) < g.value(Rat(0))) return false;
  std::vector<Rat> points;
  points.insert(points.end(), f.breakpoints().begin(), f.breakpoints().end());
  points.insert(points.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const Rat& t : points) {
    if (f.value(t) < g.value(t)) return false;
  }
  // Both functions are affine past the last breakpoint; the difference stays
  // nonnegative iff it does not decay there.
  return f.slopes().back() >= g.slopes().back();
}

namespace {

std::string pair_note(int a, int b, const std::string& what) {
  return "jobs (" + std::to_string(a) + ", " + std::to_string(b) + "): " + what;
}

OrderCertificate order_for_late_jobs(const Instance& instance) {
  for (const Job& j : instance.jobs()) {
    if (!j.weight) {
      throw Error(Errc::kInvalidArgument,
                  "job " + std::to_string(j.id) +
                      " needs a weight for the late-jobs criterion");
    }
  }
  std::vector<int> ids = identity_order(instance.n());
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Job& ja = instance.job(a);
    const Job& jb = instance.job(b);
    if (ja.release != jb.release) return ja.release < jb.release;
    if (ja.processing != jb.processing) return ja.processing < jb.processing;
    if (*ja.weight != *jb.weight) return *ja.weight > *jb.weight;
    return a < b;
  });
  OrderCertificate cert{ids, OrderCase::kAgreeableWulj, {}};
  for (size_t a = 0; a < ids.size(); ++a) {
    for (size_t b = a + 1; b < ids.size(); ++b) {
      const Job& ja = instance.job(ids[a]);
      const Job& jb = instance.job(ids[b]);
      if (ja.processing > jb.processing) {
        throw Error::not_agreeable(
            ids[a], ids[b], "processing times do not follow the release order");
      }
      if (*ja.weight < *jb.weight) {
        throw Error::not_agreeable(
            ids[a], ids[b],
            "weights do not follow the (release, processing) order");
      }
      cert.evidence.push_back(
          pair_note(ids[a], ids[b],
                    "releases and processing nondecreasing, weights "
                    "nonincreasing"));
    }
  }
  return cert;
}

// Best order by trying every permutation against the fixed-order program.
// Ties keep the lexicographically smallest permutation.
OrderCertificate order_by_enumeration(const Instance& instance,
                                      const Criterion& criterion) {
  const int n = instance.n();
  if (n > kEnumerationCap) {
    throw Error(Errc::kTooLarge,
                "no order certificate applies and n=" + std::to_string(n) +
                    " exceeds the enumeration cap of " +
                    std::to_string(kEnumerationCap));
  }
  std::vector<int> perm = identity_order(n);
  std::optional<Rat> best;
  std::vector<int> best_perm;
  long tried = 0;
  do {
    LpOutcome out = solve(build_lp(instance, perm, criterion));
    if (out.status != LpStatus::kOptimal) {
      throw Error(Errc::kInternalError, "fixed-order program came back " +
                                            std::string(lp_status_name(
                                                out.status)));
    }
    ++tried;
    if (!best || out.value < *best) {
      best = out.value;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  OrderCertificate cert{best_perm, OrderCase::kNoRelease, {}};
  cert.evidence.push_back("all releases equal; enumerated " +
                          std::to_string(tried) + " orders, best value " +
                          best->str());
  return cert;
}

}  // namespace

OrderCertificate determine_order(const Instance& instance,
                                 const Criterion& criterion) {
  const int n = instance.n();
  if (criterion.kind == CriterionKind::kWeightedLateCommonDue) {
    return order_for_late_jobs(instance);
  }
  if (static_cast<int>(criterion.per_job.size()) != n) {
    throw Error(Errc::kInvalidArgument,
                "criterion carries " +
                    std::to_string(criterion.per_job.size()) +
                    " cost functions for " + std::to_string(n) + " jobs");
  }
  const bool is_sum = criterion.kind == CriterionKind::kSum;
  auto pair_ok = [&](int a, int b) {
    const PiecewiseLinearFn& fa = criterion.per_job[a - 1];
    const PiecewiseLinearFn& fb = criterion.per_job[b - 1];
    return is_sum ? check_difference_monotone(fa, fb)
                  : check_difference_nonnegative(fa, fb);
  };
  const char* cost_ok =
      is_sum ? "cost difference nondecreasing" : "cost difference nonnegative";
  const char* cost_bad = is_sum ? "cost difference is not nondecreasing"
                                : "cost difference is not nonnegative";

  bool same_release = true;
  for (const Job& j : instance.jobs()) {
    if (j.release != instance.job(1).release) {
      same_release = false;
      break;
    }
  }

  if (same_release) {
    std::vector<int> ids = identity_order(n);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      const Job& ja = instance.job(a);
      const Job& jb = instance.job(b);
      if (ja.processing != jb.processing) return ja.processing < jb.processing;
      return a < b;
    });
    OrderCertificate cert{ids, OrderCase::kNoRelease, {}};
    cert.evidence.push_back("all releases equal; key (processing, id)");
    bool all_ok = true;
    for (size_t a = 0; a < ids.size() && all_ok; ++a) {
      for (size_t b = a + 1; b < ids.size() && all_ok; ++b) {
        if (pair_ok(ids[a], ids[b])) {
          cert.evidence.push_back(pair_note(ids[a], ids[b], cost_ok));
        } else {
          all_ok = false;
        }
      }
    }
    if (all_ok) return cert;
    return order_by_enumeration(instance, criterion);
  }

  std::vector<int> ids = identity_order(n);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Job& ja = instance.job(a);
    const Job& jb = instance.job(b);
    if (ja.release != jb.release) return ja.release < jb.release;
    if (ja.processing != jb.processing) return ja.processing < jb.processing;
    return a < b;
  });
  OrderCertificate cert{
      ids, is_sum ? OrderCase::kAgreeableSum : OrderCase::kAgreeableMax, {}};
  for (size_t a = 0; a < ids.size(); ++a) {
    for (size_t b = a + 1; b < ids.size(); ++b) {
      const Job& ja = instance.job(ids[a]);
      const Job& jb = instance.job(ids[b]);
      if (ja.processing > jb.processing) {
        throw Error::not_agreeable(
            ids[a], ids[b], "processing times do not follow the release order");
      }
      if (!pair_ok(ids[a], ids[b])) {
        throw Error::not_agreeable(ids[a], ids[b], cost_bad);
      }
      cert.evidence.push_back(pair_note(
          ids[a], ids[b],
          std::string("releases and processing nondecreasing, ") + cost_ok));
    }
  }
  return cert;
}

LinearProgram build_lp(const Instance& instance, const std::vector<int>& order,
                       const Criterion& criterion) {
  check_permutation(instance, order);
  if (criterion.kind == CriterionKind::kWeightedLateCommonDue) {
    throw Error(Errc::kUnsupportedCriterion,
                "the late-jobs criterion is handled by "
                "solve_common_due_late_jobs, not the fixed-order program");
  }
  const int n = instance.n();
  const int m = instance.machines();
  if (static_cast<int>(criterion.per_job.size()) != n) {
    throw Error(Errc::kInvalidArgument,
                "criterion carries " +
                    std::to_string(criterion.per_job.size()) +
                    " cost functions for " + std::to_string(n) + " jobs");
  }

  LinearProgram lp;
  std::vector<std::vector<int>> tid(n + 1, std::vector<int>(m + 1, -1));
  std::vector<std::vector<int>> pid(n + 1, std::vector<int>(m + 1, -1));
  std::vector<int> cid(n + 1, -1);
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= m; ++l) tid[j][l] = lp.add_variable(var_t(j, l));
    for (int l = 1; l <= m; ++l) pid[j][l] = lp.add_variable(var_p(j, l));
    cid[j] = lp.add_variable(var_c(j));
  }

  for (int j = 1; j <= n; ++j) {
    const Job& job = instance.job(order[j - 1]);
    // The machine splits cover the whole processing time.
    std::vector<std::pair<int, Rat>> sum;
    for (int l = 1; l <= m; ++l) sum.emplace_back(pid[j][l], Rat(1));
    lp.add_constraint(std::move(sum), Rel::kEq, job.processing);
    // Within a job the machines are visited highest-index first.
    for (int l = 1; l + 1 <= m; ++l) {
      lp.add_constraint({{tid[j][l + 1], Rat(1)},
                         {pid[j][l + 1], Rat(1)},
                         {tid[j][l], Rat(-1)}},
                        Rel::kLe, Rat(0));
    }
    // Nothing starts before the release date.
    lp.add_constraint({{tid[j][m], Rat(1)}}, Rel::kGe, job.release);
    // The completion is the end of the split on the first machine.
    lp.add_constraint(
        {{tid[j][1], Rat(1)}, {pid[j][1], Rat(1)}, {cid[j], Rat(-1)}},
        Rel::kEq, Rat(0));
  }
  // On every machine the jobs appear in rank order.
  for (int j = 1; j + 1 <= n; ++j) {
    for (int l = 1; l <= m; ++l) {
      lp.add_constraint(
          {{tid[j][l], Rat(1)}, {pid[j][l], Rat(1)}, {tid[j + 1][l], Rat(-1)}},
          Rel::kLe, Rat(0));
    }
  }

  std::vector<std::pair<int, Rat>> objective;
  if (criterion.kind == CriterionKind::kSum) {
    for (int j = 1; j <= n; ++j) {
      const PiecewiseLinearFn& fn = criterion.per_job[order[j - 1] - 1];
      // The cost at C is the max of the affine segment extensions, so the
      // epigraph variable only needs one row per segment. Its lower bound
      // fn(0) is implied but keeps every variable bounded.
      int phi = lp.add_variable(var_phi(j), fn.initial_value());
      for (int s = 0; s < fn.segment_count(); ++s) {
        auto [a, b] = fn.segment_line(s);
        lp.add_constraint({{phi, Rat(1)}, {cid[j], -a}}, Rel::kGe, b);
      }
      objective.emplace_back(phi, Rat(1));
    }
  } else {
    Rat floor = criterion.per_job[0].initial_value();
    for (const PiecewiseLinearFn& fn : criterion.per_job) {
      floor = rat_max(floor, fn.initial_value());
    }
    int z = lp.add_variable("z", floor);
    for (int j = 1; j <= n; ++j) {
      const PiecewiseLinearFn& fn = criterion.per_job[order[j - 1] - 1];
      for (int s = 0; s < fn.segment_count(); ++s) {
        auto [a, b] = fn.segment_line(s);
        lp.add_constraint({{z, Rat(1)}, {cid[j], -a}}, Rel::kGe, b);
      }
    }
    objective.emplace_back(z, Rat(1));
  }
  lp.set_objective(std::move(objective));
  return lp;
}

Schedule extract_schedule(const Instance& instance,
                          const std::vector<int>& order,
                          const std::map<std::string, Rat>& lp_solution) {
  check_permutation(instance, order);
  const int n = instance.n();
  const int m = instance.machines();
  auto get = [&](const std::string& name) -> const Rat& {
    auto it = lp_solution.find(name);
    if (it == lp_solution.end()) {
      throw Error(Errc::kInfeasibleLpSolution,
                  "solution lacks variable " + name);
    }
    return it->second;
  };

  std::vector<std::vector<Rat>> t(n + 1, std::vector<Rat>(m + 1));
  std::vector<std::vector<Rat>> p(n + 1, std::vector<Rat>(m + 1));
  std::vector<Rat> c(n + 1);
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= m; ++l) {
      t[j][l] = get(var_t(j, l));
      p[j][l] = get(var_p(j, l));
      if (t[j][l].sign() < 0 || p[j][l].sign() < 0) {
        throw Error(Errc::kInfeasibleLpSolution,
                    "negative start or length for rank " + std::to_string(j));
      }
    }
    c[j] = get(var_c(j));
  }
  for (int j = 1; j <= n; ++j) {
    const Job& job = instance.job(order[j - 1]);
    Rat total(0);
    for (int l = 1; l <= m; ++l) total += p[j][l];
    if (total != job.processing) {
      throw Error(Errc::kInfeasibleLpSolution,
                  "splits of job " + std::to_string(job.id) +
                      " do not sum to its processing time");
    }
    for (int l = 1; l + 1 <= m; ++l) {
      if (t[j][l + 1] + p[j][l + 1] > t[j][l]) {
        throw Error(Errc::kInfeasibleLpSolution,
                    "machine pass order violated for job " +
                        std::to_string(job.id));
      }
    }
    if (t[j][m] < job.release) {
      throw Error(Errc::kInfeasibleLpSolution,
                  "release date violated for job " + std::to_string(job.id));
    }
    if (t[j][1] + p[j][1] != c[j]) {
      throw Error(Errc::kInfeasibleLpSolution,
                  "completion link violated for job " + std::to_string(job.id));
    }
  }
  for (int j = 1; j + 1 <= n; ++j) {
    for (int l = 1; l <= m; ++l) {
      if (t[j][l] + p[j][l] > t[j + 1][l]) {
        throw Error(Errc::kInfeasibleLpSolution,
                    "rank order on machine " + std::to_string(l) +
                        " violated between ranks " + std::to_string(j) +
                        " and " + std::to_string(j + 1));
      }
    }
  }

  std::vector<Piece> pieces;
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= m; ++l) {
      if (p[j][l].sign() > 0) {
        pieces.push_back(
            Piece{order[j - 1], l, t[j][l], t[j][l] + p[j][l]});
      }
    }
  }
  return Schedule(std::move(pieces));
}

namespace {

// Shared tail of the solve paths: normalize the extracted schedule into
// non-delay form, restack, and if the machine sequences still disagree with
// the target order, run the exchange-based conversion. When the realized
// completions come out of order (possible where the costs are flat), the
// order is first refined to match them, keeping ties stable.
Schedule polish_extracted(const Instance& instance, std::vector<int>& order,
                          Schedule schedule,
                          std::vector<std::string>* notes) {
  schedule = vertical_order(
      instance, left_shift_normalize(instance, schedule), &order);
  if (is_pfs_like(instance, schedule, &order).ok()) return schedule;

  const int n = instance.n();
  std::vector<Rat> completion(n + 1);
  for (int id = 1; id <= n; ++id) {
    completion[id] = completion_time(schedule, id);
  }
  bool ordered = true;
  for (int i = 0; i + 1 < n; ++i) {
    if (completion[order[i]] > completion[order[i + 1]]) {
      ordered = false;
      break;
    }
  }
  if (!ordered) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return completion[a] < completion[b];
    });
    if (notes) {
      notes->push_back("order refined to the realized completion order");
    }
  }
  return make_pfs(instance, schedule, &order);
}

}  // namespace

SolveResult solve(const Instance& instance, const Criterion& criterion,
                  const std::vector<int>* order) {
  if (criterion.kind == CriterionKind::kWeightedLateCommonDue) {
    throw Error(Errc::kUnsupportedCriterion,
                "the late-jobs criterion is handled by "
                "solve_common_due_late_jobs");
  }
  OrderCertificate cert;
  if (order != nullptr) {
    check_permutation(instance, *order);
    cert = OrderCertificate{
        *order, OrderCase::kUserSupplied, {"order supplied by the caller"}};
  } else {
    cert = determine_order(instance, criterion);
  }

  LpOutcome primary = solve(build_lp(instance, cert.permutation, criterion));
  if (primary.status != LpStatus::kOptimal) {
    throw Error(Errc::kInternalError,
                "fixed-order program came back " +
                    std::string(lp_status_name(primary.status)));
  }
  int pivots = primary.pivots;

  // Re-solve with the optimum pinned, minimizing total completion time, so
  // the schedule is canonical and completions are as early as possible.
  LinearProgram pinned = build_lp(instance, cert.permutation, criterion);
  pinned.add_constraint(pinned.objective(), Rel::kLe, primary.value);
  std::vector<std::pair<int, Rat>> compact;
  for (int j = 1; j <= instance.n(); ++j) {
    compact.emplace_back(find_var(pinned, var_c(j)), Rat(1));
  }
  pinned.set_objective(std::move(compact));
  LpOutcome secondary = solve(pinned);
  if (secondary.status != LpStatus::kOptimal) {
    throw Error(Errc::kInternalError,
                "optimum-pinned program came back " +
                    std::string(lp_status_name(secondary.status)));
  }
  pivots += secondary.pivots;

  Schedule schedule =
      extract_schedule(instance, cert.permutation, secondary.solution);
  schedule =
      polish_extracted(instance, cert.permutation, schedule, &cert.evidence);
  if (!is_pfs_like(instance, schedule, &cert.permutation).ok() ||
      !is_non_delay(instance, schedule).ok()) {
    throw Error(Errc::kInternalError,
                "normalization lost the flow-shop shape");
  }

  Rat realized = evaluate(instance, schedule, criterion);
  if (cert.kind != OrderCase::kUserSupplied) {
    if (realized != primary.value) {
      throw Error(Errc::kInternalError,
                  "schedule value " + realized.str() +
                      " diverges from the program optimum " +
                      primary.value.str());
    }
  } else if (realized > primary.value) {
    throw Error(Errc::kInternalError,
                "schedule value " + realized.str() +
                    " exceeds the fixed-order bound " + primary.value.str());
  }
  return SolveResult{std::move(schedule), primary.value, std::move(cert),
                     pivots};
}

CommonDueResult solve_common_due_late_jobs(const Instance& instance,
                                           const Rat& common_due) {
  const int n = instance.n();
  const int m = instance.machines();
  Criterion criterion = criterion_weighted_late_common_due(common_due);
  OrderCertificate cert = determine_order(instance, criterion);

  // Copy: cert.permutation is rewritten at the end.
  const std::vector<int> perm = cert.permutation;
  auto prefix_instance = [&](int k) {
    std::vector<Job> jobs;
    for (int i = 0; i < k; ++i) {
      Job j = instance.job(perm[i]);
      j.id = i + 1;
      jobs.push_back(std::move(j));
    }
    return Instance(m, std::move(jobs));
  };

  int pivots = 0;
  std::vector<char> feasible(n + 1, 0);
  std::optional<LpOutcome> on_time_outcome;
  int k_star = 0;
  for (int k = 1; k <= n; ++k) {
    Instance sub = prefix_instance(k);
    LinearProgram lp =
        build_lp(sub, identity_order(k), criterion_sum_completion(k));
    for (int j = 1; j <= k; ++j) {
      // Deadline: the end on the first machine is the completion.
      lp.add_constraint({{find_var(lp, var_t(j, 1)), Rat(1)},
                         {find_var(lp, var_p(j, 1)), Rat(1)}},
                        Rel::kLe, common_due);
    }
    LpOutcome out = solve(lp);
    pivots += out.pivots;
    if (out.status == LpStatus::kUnbounded) {
      throw Error(Errc::kInternalError, "deadline program came back unbounded");
    }
    feasible[k] = out.status == LpStatus::kOptimal;
    if (feasible[k]) {
      k_star = k;
      on_time_outcome = std::move(out);
    }
  }
  for (int k = 2; k <= n; ++k) {
    if (feasible[k] && !feasible[k - 1]) {
      throw Error(Errc::kInternalError,
                  "prefix feasibility is not monotone at k=" +
                      std::to_string(k));
    }
  }

  Rat value(0);
  for (int i = k_star; i < n; ++i) value += *instance.job(perm[i]).weight;

  std::vector<Piece> pieces;
  std::vector<int> final_order;
  if (k_star > 0) {
    Instance sub = prefix_instance(k_star);
    std::vector<int> sub_order = identity_order(k_star);
    Schedule s = extract_schedule(sub, sub_order, on_time_outcome->solution);
    s = polish_extracted(sub, sub_order, s, &cert.evidence);
    for (int sub_id = 1; sub_id <= k_star; ++sub_id) {
      if (completion_time(s, sub_id) > common_due) {
        throw Error(Errc::kInternalError,
                    "an on-time job missed the due date after normalization");
      }
    }
    for (int sub_id : sub_order) final_order.push_back(perm[sub_id - 1]);
    for (Piece p : s.pieces()) {
      p.job = perm[p.job - 1];
      pieces.push_back(std::move(p));
    }
  }
  if (k_star < n) {
    // Late jobs run from the due date on, in the tail of the order.
    std::vector<Job> jobs;
    for (int i = k_star; i < n; ++i) {
      Job j = instance.job(perm[i]);
      j.id = i - k_star + 1;
      j.release = rat_max(j.release, common_due);
      jobs.push_back(std::move(j));
    }
    Instance sub(m, std::move(jobs));
    const int tail = n - k_star;
    std::vector<int> sub_order = identity_order(tail);
    LinearProgram lp =
        build_lp(sub, sub_order, criterion_sum_completion(tail));
    LpOutcome out = solve(lp);
    if (out.status != LpStatus::kOptimal) {
      throw Error(Errc::kInternalError,
                  "late-part program came back " +
                      std::string(lp_status_name(out.status)));
    }
    pivots += out.pivots;
    Schedule s = extract_schedule(sub, sub_order, out.solution);
    s = polish_extracted(sub, sub_order, s, &cert.evidence);
    for (int sub_id : sub_order) {
      final_order.push_back(perm[k_star + sub_id - 1]);
    }
    for (Piece p : s.pieces()) {
      p.job = perm[k_star + p.job - 1];
      pieces.push_back(std::move(p));
    }
  }

  cert.permutation = final_order;
  Schedule merged{std::move(pieces)};
  if (!check_feasible(instance, merged).ok()) {
    throw Error(Errc::kInternalError, "merged late-jobs schedule infeasible");
  }
  if (!is_pfs_like(instance, merged, &cert.permutation).ok()) {
    throw Error(Errc::kInternalError,
                "merged late-jobs schedule lost the flow-shop shape");
  }
  Rat realized = evaluate(instance, merged, criterion);
  if (realized != value) {
    throw Error(Errc::kInternalError,
                "late weight " + realized.str() +
                    " diverges from the prefix scan value " + value.str());
  }
  return CommonDueResult{std::move(merged), std::move(value), k_star,
                         std::move(cert), pivots};
}

}  // namespace pfsched

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

#include "pfsched/simplex.hpp"

namespace pfsched {

const char* lp_status_name(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

void LinearProgram::check_terms(
    const std::vector<std::pair<int, Rat>>& terms) const {
  for (const auto& [idx, coeff] : terms) {
    (void)coeff;
    if (idx < 0 || idx >= num_variables()) {
      throw Error(Errc::kMalformedLp,
                  "coefficient references undeclared variable index " +
                      std::to_string(idx));
    }
  }
}

int LinearProgram::add_variable(const std::string& name,
                                std::optional<Rat> lower) {
  for (const LpVariable& v : vars_) {
    if (v.name == name) {
      throw Error(Errc::kMalformedLp, "duplicate variable name " + name);
    }
  }
  vars_.push_back(LpVariable{name, std::move(lower)});
  return static_cast<int>(vars_.size()) - 1;
}

void LinearProgram::add_constraint(std::vector<std::pair<int, Rat>> terms,
                                   Rel rel, Rat rhs) {
  check_terms(terms);
  rows_.push_back(LpConstraint{std::move(terms), rel, std::move(rhs)});
}

void LinearProgram::set_objective(std::vector<std::pair<int, Rat>> terms) {
  check_terms(terms);
  obj_ = std::move(terms);
}

namespace {

// Dense two-phase tableau. Column layout: structural variables (shifted to
// lower bound zero), then one slack or surplus per kept row, then artificials.
// Row layout: kept constraint rows, then the objective row. rhs_ holds the
// right-hand sides; basis_[r] is the column basic in row r.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, LpOutcome* out) : lp_(lp), out_(out) {}

  LpStatus run();

 private:
  struct Row {
    std::vector<Rat> a;  // structural part, size n
    Rel rel;
    Rat rhs;
  };

  void prepare_rows();
  void build_matrix();
  bool phase1();
  bool phase2();  // false = unbounded
  bool simplex_loop(bool phase_one);
  void pivot(int row, int col);
  void price_out(std::vector<Rat>* cost, Rat* cost_rhs) const;

  const LinearProgram& lp_;
  LpOutcome* out_;

  int n_ = 0;                 // structural columns
  std::vector<Rat> lb_;       // lower bound per structural variable
  std::vector<Row> rows_;     // normalized rows (rhs >= 0)

  int cols_ = 0;              // total columns
  int first_artificial_ = 0;  // columns >= this are artificial
  std::vector<std::vector<Rat>> mat_;  // rows x cols
  std::vector<Rat> rhs_;
  std::vector<int> basis_;
  std::vector<Rat> cost_;     // current reduced cost row
  Rat cost_rhs_;              // negated objective value of current basis
};

void Tableau::prepare_rows() {
  n_ = lp_.num_variables();
  lb_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    const LpVariable& v = lp_.variables()[i];
    if (!v.lower.has_value()) {
      throw Error(Errc::kMalformedLp,
                  "variable " + v.name + " has no lower bound");
    }
    lb_[i] = *v.lower;
  }

  // Singleton >= rows with a positive coefficient become tightened lower
  // bounds instead of rows (this removes the release-date rows and their
  // artificials from the typical scheduling program).
  std::vector<bool> consumed(lp_.num_constraints(), false);
  for (int c = 0; c < lp_.num_constraints(); ++c) {
    const LpConstraint& row = lp_.constraints()[c];
    std::map<int, Rat> merged;
    for (const auto& [idx, coeff] : row.terms) merged[idx] += coeff;
    for (auto it = merged.begin(); it != merged.end();) {
      if (it->second.sign() == 0) it = merged.erase(it); else ++it;
    }
    if (merged.size() == 1 && row.rel == Rel::kGe &&
        merged.begin()->second.sign() > 0) {
      int idx = merged.begin()->first;
      Rat bound = row.rhs / merged.begin()->second;
      lb_[idx] = rat_max(lb_[idx], bound);
      consumed[c] = true;
    }
  }

  for (int c = 0; c < lp_.num_constraints(); ++c) {
    if (consumed[c]) continue;
    const LpConstraint& src = lp_.constraints()[c];
    Row row;
    row.a.assign(n_, Rat(0));
    row.rel = src.rel;
    row.rhs = src.rhs;
    for (const auto& [idx, coeff] : src.terms) row.a[idx] += coeff;
    // Shift x = x' + lb so every structural column has lower bound zero.
    for (int i = 0; i < n_; ++i) {
      if (row.a[i].sign() != 0) row.rhs -= row.a[i] * lb_[i];
    }
    rows_.push_back(std::move(row));
  }

  for (Row& row : rows_) {
    if (row.rhs.sign() < 0) {
      for (Rat& v : row.a) {
        if (v.sign() != 0) v = -v;
      }
      row.rhs = -row.rhs;
      if (row.rel == Rel::kLe) row.rel = Rel::kGe;
      else if (row.rel == Rel::kGe) row.rel = Rel::kLe;
    }
  }
}

void Tableau::build_matrix() {
  const int m = static_cast<int>(rows_.size());
  int slack_cols = 0;
  int artificial_cols = 0;
  for (const Row& row : rows_) {
    if (row.rel != Rel::kEq) ++slack_cols;
    if (row.rel != Rel::kLe) ++artificial_cols;
  }
  first_artificial_ = n_ + slack_cols;
  cols_ = first_artificial_ + artificial_cols;

  mat_.assign(m, std::vector<Rat>(cols_, Rat(0)));
  rhs_.assign(m, Rat(0));
  basis_.assign(m, -1);

  int next_slack = n_;
  int next_artificial = first_artificial_;
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < n_; ++i) mat_[r][i] = rows_[r].a[i];
    rhs_[r] = rows_[r].rhs;
    switch (rows_[r].rel) {
      case Rel::kLe:
        mat_[r][next_slack] = Rat(1);
        basis_[r] = next_slack;
        ++next_slack;
        break;
      case Rel::kGe:
        mat_[r][next_slack] = Rat(-1);
        ++next_slack;
        mat_[r][next_artificial] = Rat(1);
        basis_[r] = next_artificial;
        ++next_artificial;
        break;
      case Rel::kEq:
        mat_[r][next_artificial] = Rat(1);
        basis_[r] = next_artificial;
        ++next_artificial;
        break;
    }
  }
}

void Tableau::pivot(int row, int col) {
  ++out_->pivots;
  Rat inv = Rat(1) / mat_[row][col];
  if (!(inv == Rat(1))) {
    for (int c = 0; c < cols_; ++c) {
      if (mat_[row][c].sign() != 0) mat_[row][c] = mat_[row][c] * inv;
    }
    rhs_[row] = rhs_[row] * inv;
  }
  const std::vector<Rat>& prow = mat_[row];
  const int m = static_cast<int>(mat_.size());
  for (int r = 0; r < m; ++r) {
    if (r == row) continue;
    Rat factor = mat_[r][col];
    if (factor.sign() == 0) continue;
    std::vector<Rat>& target = mat_[r];
    for (int c = 0; c < cols_; ++c) {
      if (prow[c].sign() != 0) target[c] = target[c] - factor * prow[c];
    }
    rhs_[r] = rhs_[r] - factor * rhs_[row];
  }
  Rat cfac = cost_[col];
  if (cfac.sign() != 0) {
    for (int c = 0; c < cols_; ++c) {
      if (prow[c].sign() != 0) cost_[c] = cost_[c] - cfac * prow[c];
    }
    cost_rhs_ = cost_rhs_ - cfac * rhs_[row];
  }
  basis_[row] = col;
}

bool Tableau::simplex_loop(bool phase_one) {
  const int m = static_cast<int>(mat_.size());
  const int limit = phase_one ? cols_ : first_artificial_;
  for (;;) {
    // Bland: entering column = lowest index with negative reduced cost.
    int enter = -1;
    for (int c = 0; c < limit; ++c) {
      if (cost_[c].sign() < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return true;  // optimal for this phase

    int leave = -1;
    Rat best_ratio;
    for (int r = 0; r < m; ++r) {
      if (mat_[r][enter].sign() <= 0) continue;
      Rat ratio = rhs_[r] / mat_[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded direction
    pivot(leave, enter);
  }
}

bool Tableau::phase1() {
  bool have_artificial = cols_ > first_artificial_;
  if (!have_artificial) return true;

  cost_.assign(cols_, Rat(0));
  cost_rhs_ = Rat(0);
  for (int c = first_artificial_; c < cols_; ++c) cost_[c] = Rat(1);
  // Price out the artificial basis.
  const int m = static_cast<int>(mat_.size());
  for (int r = 0; r < m; ++r) {
    if (basis_[r] >= first_artificial_) {
      for (int c = 0; c < cols_; ++c) {
        if (mat_[r][c].sign() != 0) cost_[c] = cost_[c] - mat_[r][c];
      }
      cost_rhs_ = cost_rhs_ - rhs_[r];
    }
  }
  if (!simplex_loop(true)) {
    // The artificial sum is bounded below by zero, so this cannot happen.
    throw Error(Errc::kInternalError, "phase one reported unbounded");
  }
  if ((-cost_rhs_).sign() > 0) return false;  // positive infeasibility

  // Drive leftover artificials out of the basis.
  for (int r = 0; r < m; ++r) {
    if (basis_[r] < first_artificial_) continue;
    int col = -1;
    for (int c = 0; c < first_artificial_; ++c) {
      if (mat_[r][c].sign() != 0) {
        col = c;
        break;
      }
    }
    if (col >= 0) {
      pivot(r, col);  // rhs is zero here, so feasibility is preserved
    }
    // else: redundant row; leave the artificial basic at value zero.
  }
  return true;
}

bool Tableau::phase2() {
  cost_.assign(cols_, Rat(0));
  cost_rhs_ = Rat(0);
  for (const auto& [idx, coeff] : lp_.objective()) {
    cost_[idx] = cost_[idx] + coeff;
  }
  // Price out the current basis.
  const int m = static_cast<int>(mat_.size());
  for (int r = 0; r < m; ++r) {
    Rat factor = cost_[basis_[r]];
    if (factor.sign() == 0) continue;
    for (int c = 0; c < cols_; ++c) {
      if (mat_[r][c].sign() != 0) cost_[c] = cost_[c] - factor * mat_[r][c];
    }
    cost_rhs_ = cost_rhs_ - factor * rhs_[r];
  }
  return simplex_loop(false);
}

LpStatus Tableau::run() {
  prepare_rows();
  build_matrix();
  if (!phase1()) return LpStatus::kInfeasible;
  if (!phase2()) return LpStatus::kUnbounded;

  std::vector<Rat> shifted(n_, Rat(0));
  const int m = static_cast<int>(mat_.size());
  for (int r = 0; r < m; ++r) {
    if (basis_[r] < n_) shifted[basis_[r]] = rhs_[r];
  }
  Rat value(0);
  out_->solution.clear();
  std::vector<Rat> x(n_);
  for (int i = 0; i < n_; ++i) {
    x[i] = shifted[i] + lb_[i];
    out_->solution[lp_.variables()[i].name] = x[i];
  }
  for (const auto& [idx, coeff] : lp_.objective()) value = value + coeff * x[idx];
  out_->value = value;

  // Exact re-verification of every constraint and bound.
  for (int i = 0; i < n_; ++i) {
    if (x[i] < *lp_.variables()[i].lower) {
      throw Error(Errc::kInternalError,
                  "solver produced a bound-violating solution");
    }
  }
  for (const LpConstraint& row : lp_.constraints()) {
    Rat lhs(0);
    for (const auto& [idx, coeff] : row.terms) lhs = lhs + coeff * x[idx];
    bool ok = row.rel == Rel::kLe   ? !(lhs > row.rhs)
              : row.rel == Rel::kGe ? !(lhs < row.rhs)
                                    : lhs == row.rhs;
    if (!ok) {
      throw Error(Errc::kInternalError,
                  "solver produced a constraint-violating solution");
    }
  }
  return LpStatus::kOptimal;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  LpOutcome out;
  Tableau tableau(lp, &out);
  out.status = tableau.run();
  if (out.status != LpStatus::kOptimal) {
    out.solution.clear();
    out.value = Rat(0);
  }
  return out;
}

}  // namespace pfsched

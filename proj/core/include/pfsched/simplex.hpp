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

#ifndef PFSCHED_SIMPLEX_HPP_
#define PFSCHED_SIMPLEX_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfsched/errors.hpp"
#include "pfsched/rational.hpp"

namespace pfsched {

// Exact-rational linear programming: dense tableau, two-phase method,
// Bland's anti-cycling pivot rule. Minimization only. Every variable must
// carry a finite lower bound (free variables are rejected); upper bounds are
// expressed as ordinary constraints.

enum class Rel { kLe, kEq, kGe };

struct LpVariable {
  std::string name;
  std::optional<Rat> lower;  // nullopt marks a free variable (unsupported)
};

struct LpConstraint {
  std::vector<std::pair<int, Rat>> terms;  // (variable index, coefficient)
  Rel rel = Rel::kLe;
  Rat rhs;
};

class LinearProgram {
 public:
  // Returns the index of the new variable. Names must be unique; they key
  // the solution map in LpOutcome.
  int add_variable(const std::string& name, std::optional<Rat> lower = Rat(0));

  void add_constraint(std::vector<std::pair<int, Rat>> terms, Rel rel, Rat rhs);

  // Objective is minimized. Unmentioned variables have coefficient zero.
  void set_objective(std::vector<std::pair<int, Rat>> terms);

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  const std::vector<LpVariable>& variables() const { return vars_; }
  const std::vector<LpConstraint>& constraints() const { return rows_; }
  const std::vector<std::pair<int, Rat>>& objective() const { return obj_; }

 private:
  void check_terms(const std::vector<std::pair<int, Rat>>& terms) const;

  std::vector<LpVariable> vars_;
  std::vector<LpConstraint> rows_;
  std::vector<std::pair<int, Rat>> obj_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* lp_status_name(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  std::map<std::string, Rat> solution;  // populated when kOptimal
  Rat value;                            // objective value when kOptimal
  int pivots = 0;
};

// Solves the program exactly. Optimal outcomes are re-verified against every
// constraint before being returned, so a returned solution satisfies the
// program with exact rational arithmetic.
LpOutcome solve(const LinearProgram& lp);

}  // namespace pfsched

#endif  // PFSCHED_SIMPLEX_HPP_

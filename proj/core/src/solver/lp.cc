// Copyright 2026 The pwtame Authors.
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

#include "pwtame/solver/lp.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "pwtame/solver/simplex.h"

namespace pwtame::solver {

absl::Status LpProblem::Validate() const {
  const int n = num_columns();
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n) {
    return absl::InvalidArgumentError("cost and bound vectors differ in size");
  }
  for (int j = 0; j < n; ++j) {
    if (std::isnan(cost[j]) || !std::isfinite(cost[j])) {
      return absl::InvalidArgumentError(
          absl::StrCat("column ", j, " has a non-finite cost"));
    }
    if (!(lower[j] <= upper[j]) || lower[j] == kInfinity ||
        upper[j] == -kInfinity) {
      return absl::InvalidArgumentError(
          absl::StrCat("column ", j, " has an empty or NaN box"));
    }
  }
  for (int i = 0; i < num_rows(); ++i) {
    const LpRow& row = rows[i];
    if (!(row.lower <= row.upper) || row.lower == kInfinity ||
        row.upper == -kInfinity) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has an empty or NaN range"));
    }
    for (const Term& t : row.terms) {
      if (t.var < 0 || t.var >= n || !std::isfinite(t.coeff)) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", i, " has a bad term"));
      }
    }
  }
  return absl::OkStatus();
}

LpProblem RelaxationOf(const formulation::MipModel& model) {
  LpProblem lp;
  for (int j = 0; j < model.num_variables(); ++j) {
    const formulation::Variable& v = model.variable(j);
    lp.cost.push_back(model.objective()[j]);
    lp.lower.push_back(v.lower);
    lp.upper.push_back(v.upper);
  }
  for (const formulation::Constraint& c : model.constraints()) {
    LpRow row;
    row.terms = c.terms;
    switch (c.sense) {
      case formulation::Sense::kLessEqual:
        row.upper = c.rhs;
        break;
      case formulation::Sense::kGreaterEqual:
        row.lower = c.rhs;
        break;
      case formulation::Sense::kEqual:
        row.lower = row.upper = c.rhs;
        break;
    }
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

std::string LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
    case LpStatus::kTimeLimit:
      return "time_limit";
    case LpStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

absl::StatusOr<LpResult> SolveLp(const LpProblem& problem,
                                 const LpOptions& options) {
  if (absl::Status status = problem.Validate(); !status.ok()) return status;
  const int n = problem.num_columns();

  // Presolve: substitute fixed columns, drop rows left empty.
  std::vector<int> reduced_index(n, -1);
  LpProblem reduced;
  for (int j = 0; j < n; ++j) {
    if (problem.lower[j] == problem.upper[j]) continue;
    reduced_index[j] = reduced.num_columns();
    reduced.cost.push_back(problem.cost[j]);
    reduced.lower.push_back(problem.lower[j]);
    reduced.upper.push_back(problem.upper[j]);
  }
  LpResult result;
  for (const LpRow& row : problem.rows) {
    LpRow out;
    double fixed = 0.0;
    for (const Term& t : row.terms) {
      if (reduced_index[t.var] < 0) {
        fixed += t.coeff * problem.lower[t.var];
      } else {
        out.terms.push_back({reduced_index[t.var], t.coeff});
      }
    }
    out.lower = row.lower - fixed;
    out.upper = row.upper - fixed;
    if (out.terms.empty()) {
      const double tol =
          DenseSimplex::kPrimalTolerance * (1.0 + std::abs(fixed));
      if (out.lower > tol || out.upper < -tol) {
        result.status = LpStatus::kInfeasible;
        return result;
      }
      continue;
    }
    reduced.rows.push_back(std::move(out));
  }

  absl::StatusOr<DenseSimplex> simplex =
      DenseSimplex::Create(reduced, options.max_tableau_bytes);
  if (!simplex.ok()) return simplex.status();
  result.status = simplex->Solve(options);
  result.iterations = simplex->iterations();
  const std::vector<double> y = simplex->Solution();
  result.x.resize(n);
  for (int j = 0; j < n; ++j) {
    result.x[j] = reduced_index[j] < 0 ? problem.lower[j] : y[reduced_index[j]];
  }
  for (int j = 0; j < n; ++j) result.objective += problem.cost[j] * result.x[j];
  for (const LpRow& row : problem.rows) {
    double s = 0.0, scale = 1.0;
    for (const Term& t : row.terms) {
      s += t.coeff * result.x[t.var];
      scale += std::abs(t.coeff * result.x[t.var]);
    }
    const double violation = std::max({row.lower - s, s - row.upper, 0.0});
    result.max_residual = std::max(result.max_residual, violation / scale);
  }
  return result;
}

}  // namespace pwtame::solver

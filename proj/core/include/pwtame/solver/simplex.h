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

#ifndef PWTAME_SOLVER_SIMPLEX_H_
#define PWTAME_SOLVER_SIMPLEX_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "pwtame/solver/lp.h"

namespace pwtame::solver {

// Bounded-variable primal simplex on a dense tableau.
//
// Every row i gets a logical column r_i = a_i^T x with bounds
// [row_lower, row_upper]; the tableau holds B^-1 [A | -I]. Phase 1 minimizes
// the sum of bound violations of the basic variables (composite objective),
// so Solve() can start from any basis: after bound changes, the previous
// basis is reused as is. Pricing is Dantzig's rule with a two-pass Harris
// ratio test; after kStallLimit consecutive steps without progress the
// engine switches to Bland's smallest-index rule until it makes progress
// again. Optimal points are checked against the original rows; a residual
// above tolerance triggers a refactorization from scratch and a re-solve, and
// a second failure reports kNumericalFailure.
//
// Objects are copyable; branch-and-bound workers each own one.
class DenseSimplex {
 public:
  static constexpr int kStallLimit = 50;
  static constexpr double kPrimalTolerance = 1e-9;
  static constexpr double kDualTolerance = 1e-9;
  static constexpr double kPivotTolerance = 1e-9;
  static constexpr double kResidualTolerance = 1e-9;

  static absl::StatusOr<DenseSimplex> Create(const LpProblem& problem,
                                             size_t max_tableau_bytes);

  int num_columns() const { return n_; }
  int num_rows() const { return m_; }

  // Changes the box of structural column j. A nonbasic column moves onto the
  // new box right away; a basic one is repaired by the next Solve().
  void SetColumnBounds(int j, double lower, double upper);
  double column_lower(int j) const { return lower_[j]; }
  double column_upper(int j) const { return upper_[j]; }

  LpStatus Solve(const LpOptions& options);

  // Structural values of the last solve.
  std::vector<double> Solution() const;
  double Objective() const;
  // Largest scaled row residual |a_i^T x - r_i| / (1 + sum_j |a_ij x_j|).
  double MaxResidual() const;
  // Largest bound violation over all variables, scaled by 1 + |x|.
  double MaxBoundViolation() const;
  int64_t iterations() const { return iterations_; }

 private:
  enum class VarStatus : uint8_t { kBasic, kAtLower, kAtUpper, kFree, kFixed };

  DenseSimplex() = default;

  double& T(int i, int j) { return tableau_[static_cast<size_t>(i) * N_ + j]; }
  double T(int i, int j) const {
    return tableau_[static_cast<size_t>(i) * N_ + j];
  }

  void ResetTableau();
  void Pivot(int row, int col);
  void Refactor();
  void RecomputeBasics();
  VarStatus NonbasicStatusFor(int k, double preferred) const;
  double Violation(int k) const;
  LpStatus Iterate(const LpOptions& options);

  int n_ = 0;  // structural columns
  int m_ = 0;  // rows
  int N_ = 0;  // n_ + m_
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<LpRow> rows_;
  std::vector<double> tableau_;
  std::vector<int> basis_;        // basic variable of each row
  std::vector<int> basic_row_;    // row of a basic variable, -1 otherwise
  std::vector<VarStatus> status_;
  std::vector<double> x_;
  std::vector<double> reduced_;
  std::vector<int> row_nonzeros_;
  // Columns priced out for the current step (their pivots were too small).
  std::vector<char> skip_;
  std::vector<int> rejected_;
  int64_t iterations_ = 0;
};

}  // namespace pwtame::solver

#endif  // PWTAME_SOLVER_SIMPLEX_H_

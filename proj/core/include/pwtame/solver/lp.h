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

#ifndef PWTAME_SOLVER_LP_H_
#define PWTAME_SOLVER_LP_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pwtame/formulation/mip_model.h"

namespace pwtame::solver {

using formulation::kInfinity;
using formulation::Term;

// row_lower <= terms^T x <= row_upper.
struct LpRow {
  std::vector<Term> terms;
  double lower = -kInfinity;
  double upper = kInfinity;
};

// minimize cost^T x subject to the rows and lower <= x <= upper.
struct LpProblem {
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;

  int num_columns() const { return static_cast<int>(cost.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  // Column/row sizes agree, bounds are ordered and not NaN, terms reference
  // existing columns.
  absl::Status Validate() const;
};

// The continuous relaxation: binaries become [0, 1] columns.
LpProblem RelaxationOf(const formulation::MipModel& model);

enum class LpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kTimeLimit,
  kNumericalFailure,
};

std::string LpStatusName(LpStatus status);

using Clock = std::chrono::steady_clock;

struct LpOptions {
  int64_t max_iterations = std::numeric_limits<int64_t>::max();
  Clock::time_point deadline = Clock::time_point::max();
  // The dense tableau needs rows x (rows + columns) doubles; larger problems
  // are refused with ResourceExhausted.
  size_t max_tableau_bytes = size_t{1} << 30;
};

struct LpResult {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  int64_t iterations = 0;
  // Largest scaled row residual |a^T x - activity| / (1 + sum |a_j x_j|) of
  // the returned point.
  double max_residual = 0.0;
};

// Solves from the all-slack basis after dropping fixed columns and empty
// rows. Fails only on malformed input or when the tableau would not fit.
absl::StatusOr<LpResult> SolveLp(const LpProblem& problem,
                                 const LpOptions& options = {});

}  // namespace pwtame::solver

#endif  // PWTAME_SOLVER_LP_H_

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

#ifndef PWTAME_SOLVER_BRANCH_AND_BOUND_H_
#define PWTAME_SOLVER_BRANCH_AND_BOUND_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pwtame/formulation/mip_model.h"
#include "pwtame/solver/lp.h"

namespace pwtame::solver {

struct SolverConfig {
  double time_limit = 300.0;  // seconds
  double gap_tolerance = 1e-6;
  int64_t node_limit = std::numeric_limits<int64_t>::max();
  // One worker and no timing-dependent decisions: identical inputs give
  // identical node sequences and incumbents.
  bool deterministic = true;
  int threads = 1;
  size_t max_tableau_bytes = size_t{1} << 30;

  absl::Status Validate() const;
};

enum class MipStatus {
  kOptimal,
  // A limit (time, nodes) stopped the search with an incumbent in hand.
  kFeasibleTimeLimit,
  kInfeasible,
  kUnbounded,
  // A limit stopped the search before any incumbent was found.
  kLimitNoIncumbent,
  kNumericalFailure,
};

std::string MipStatusName(MipStatus status);

struct TracePoint {
  double seconds = 0.0;
  int64_t nodes = 0;
  double value = 0.0;
};

struct MipResult {
  MipStatus status = MipStatus::kLimitNoIncumbent;
  std::optional<formulation::Assignment> incumbent;
  double objective = kInfinity;
  double best_bound = -kInfinity;
  double gap = kInfinity;
  int64_t nodes = 0;
  int64_t lp_iterations = 0;
  double wall_time = 0.0;
  // Best bound and incumbent objective each time they change.
  std::vector<TracePoint> bound_trace;
  std::vector<TracePoint> incumbent_trace;
  std::string message;
};

// (incumbent - bound) / max(|incumbent|, 1); infinite without incumbent.
double RelativeGap(double incumbent, double bound);

// Best-first branch-and-bound over LP relaxations. Nodes are ordered by
// (parent LP bound, deeper first, creation order); the branching variable is
// the most fractional binary, lowest index on ties, and the child on the side
// the LP value rounds to is explored first. Every incumbent is verified with
// CheckFeasible at 1e-6 before it is accepted.
//
// Fails (instead of returning a MipResult) on malformed models, non-binary
// integer variables or a relaxation too large for the dense LP engine.
absl::StatusOr<MipResult> SolveMip(const formulation::MipModel& model,
                                   const SolverConfig& config);

// The root LP relaxation alone.
absl::StatusOr<LpResult> SolveRelaxation(const formulation::MipModel& model,
                                         const LpOptions& options = {});

}  // namespace pwtame::solver

#endif  // PWTAME_SOLVER_BRANCH_AND_BOUND_H_

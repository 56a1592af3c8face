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

#ifndef PWTAME_FORMULATION_FEASIBILITY_H_
#define PWTAME_FORMULATION_FEASIBILITY_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pwtame/formulation/mip_model.h"

namespace pwtame::formulation {

inline constexpr double kFeasibilityTolerance = 1e-6;

struct Violation {
  // Constraint name, or "bound:<var>" / "integrality:<var>".
  std::string what;
  double magnitude = 0.0;
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  double objective = 0.0;
  double max_violation = 0.0;

  bool feasible() const { return violations.empty(); }
  std::string Summary(int max_items = 10) const;
};

// Lists every constraint, bound and integrality requirement violated by more
// than `tolerance` (absolute). Fails if the assignment leaves a variable
// unset.
absl::StatusOr<FeasibilityReport> CheckFeasible(
    const MipModel& model, const Assignment& assignment,
    double tolerance = kFeasibilityTolerance);

}  // namespace pwtame::formulation

#endif  // PWTAME_FORMULATION_FEASIBILITY_H_

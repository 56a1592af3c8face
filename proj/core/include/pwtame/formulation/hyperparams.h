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

#ifndef PWTAME_FORMULATION_HYPERPARAMS_H_
#define PWTAME_FORMULATION_HYPERPARAMS_H_

#include <optional>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/functions/sample_set.h"

namespace pwtame::formulation {

enum class FormulationKind { kAxisAligned, kHyperplane };

std::string FormulationName(FormulationKind kind);
// Accepts "axis"/"axis_aligned" and "hplane"/"hyperplane".
absl::StatusOr<FormulationKind> ParseFormulation(absl::string_view name);

enum class Objective { kMae };

struct Hyperparams {
  int depth = 2;
  int min_leaf_points = 1;
  int degree = 1;
  // Margin of the strict hyperplane inequality.
  double mu = 1e-4;
  Objective objective = Objective::kMae;
  // Unset means derived from the data (see ResolveBigM).
  std::optional<double> big_m;
  std::optional<double> coeff_bound;

  absl::Status Validate() const;
};

struct BigM {
  double big_m = 0.0;
  double coeff_bound = 0.0;
};

// With x in [0,1]^d and |c_k| <= C, every leaf polynomial satisfies
// |poly| <= C * (basis size), so M = max|y| + C * C(r+d, d) deactivates the
// residual rows. The default C is 10 * max(1, max|y|).
absl::StatusOr<BigM> ResolveBigM(const functions::SampleSet& samples,
                                 const Hyperparams& params);

}  // namespace pwtame::formulation

#endif  // PWTAME_FORMULATION_HYPERPARAMS_H_

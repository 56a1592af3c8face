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

#include "pwtame/formulation/hyperparams.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "pwtame/tree/monomial_basis.h"
#include "pwtame/tree/tree_shape.h"

namespace pwtame::formulation {

std::string FormulationName(FormulationKind kind) {
  return kind == FormulationKind::kAxisAligned ? "axis" : "hplane";
}

absl::StatusOr<FormulationKind> ParseFormulation(absl::string_view name) {
  if (name == "axis" || name == "axis_aligned") {
    return FormulationKind::kAxisAligned;
  }
  if (name == "hplane" || name == "hyperplane") {
    return FormulationKind::kHyperplane;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown formulation '", name, "' (axis|hplane)"));
}

absl::Status Hyperparams::Validate() const {
  if (depth < 0 || depth > tree::kMaxDepth) {
    return absl::InvalidArgumentError(
        absl::StrCat("depth must be in [0, ", tree::kMaxDepth, "], got ", depth));
  }
  if (min_leaf_points < 1) {
    return absl::InvalidArgumentError("N_min must be at least 1");
  }
  if (degree < 0) return absl::InvalidArgumentError("degree must be >= 0");
  if (!(mu > 0.0)) return absl::InvalidArgumentError("mu must be positive");
  if (big_m && !(*big_m > 0.0)) {
    return absl::InvalidArgumentError("big-M must be positive");
  }
  if (coeff_bound && !(*coeff_bound > 0.0)) {
    return absl::InvalidArgumentError("coefficient bound must be positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<BigM> ResolveBigM(const functions::SampleSet& samples,
                                 const Hyperparams& params) {
  if (samples.size() == 0 && (!params.big_m || !params.coeff_bound)) {
    return absl::InvalidArgumentError(
        "cannot derive big-M from an empty sample");
  }
  double max_abs_y = 0.0;
  for (double y : samples.values) max_abs_y = std::max(max_abs_y, std::abs(y));
  BigM out;
  out.coeff_bound = params.coeff_bound.value_or(10.0 * std::max(1.0, max_abs_y));
  const double basis_size = static_cast<double>(
      tree::MonomialBasis::Count(samples.dimension, params.degree));
  out.big_m = params.big_m.value_or(max_abs_y + out.coeff_bound * basis_size);
  return out;
}

}  // namespace pwtame::formulation

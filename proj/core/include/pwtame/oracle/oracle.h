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

#ifndef PWTAME_ORACLE_ORACLE_H_
#define PWTAME_ORACLE_ORACLE_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/tree/model.h"
#include "pwtame/tree/monomial_basis.h"

namespace pwtame::oracle {

enum class Loss { kMae, kMse };

std::string LossName(Loss loss);
absl::StatusOr<Loss> ParseLoss(absl::string_view name);

struct LeafFit {
  std::vector<double> coeffs;
  // Total (not mean) loss over the points.
  double loss = 0.0;
};

// Best polynomial in `basis` for the points `indices` of `samples`.
// kMae solves the least-absolute-deviation LP (coefficients boxed to
// [-coeff_bound, coeff_bound], as in the MIP); kMse solves the normal
// equations, retrying with a 1e-10 ridge when they are singular (the box does
// not apply).
absl::StatusOr<LeafFit> FitLeaf(
    const functions::SampleSet& samples, std::span<const int> indices,
    const tree::MonomialBasis& basis, Loss loss,
    double coeff_bound = std::numeric_limits<double>::infinity());

// Candidate axis-aligned thresholds, one sorted list per dimension. With
// v_1 < ... < v_k the distinct sample values of dimension j, b = 0 sends
// every point right, b = v_q sends exactly the points with x_j <= v_(q-1)
// left (x + eps_j <= b) and the rest right (x >= b), and b = 1 sends every
// point left when v_k + eps_j <= 1. These realize every partition some
// b in [0, 1] realizes under the MIP's split semantics.
struct ThresholdSet {
  std::vector<std::vector<double>> per_dimension;
};

ThresholdSet BuildThresholdSet(const functions::SampleSet& samples,
                               std::span<const double> eps);

struct OracleOptions {
  int depth = 2;
  int degree = 1;
  int min_leaf_points = 1;
  Loss loss = Loss::kMae;
  // Defaults to the MIP's coefficient box 10 * max(1, max |y|).
  std::optional<double> coeff_bound;
  // The search is exponential in depth; without the override it is limited
  // to n <= 40, depth <= 2 and dimension <= 3.
  bool override_guard = false;
  // Root split candidates are shared among this many threads; the result
  // does not depend on it.
  int threads = 1;
};

struct OracleResult {
  tree::PwPolyModel model;
  // Total loss / n (the MIP objective for kMae).
  double objective = 0.0;
  int64_t leaf_fits = 0;
  int64_t partitions = 0;
};

// Exhaustive search over every (dimension, threshold) choice at every branch
// node of the complete depth-D tree, with the MIP's left/right semantics and
// its N_min-or-empty leaf rule. Subtrees depend only on the points that reach
// them, so results are memoized per (height, point subset). Among equally
// good trees the first in (dimension, threshold) order wins; thresholds of
// the returned model are canonicalized like decoded MIP solutions.
absl::StatusOr<OracleResult> EnumerateAxisTrees(
    const functions::SampleSet& samples, const OracleOptions& options);

}  // namespace pwtame::oracle

#endif  // PWTAME_ORACLE_ORACLE_H_

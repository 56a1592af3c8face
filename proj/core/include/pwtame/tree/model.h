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

#ifndef PWTAME_TREE_MODEL_H_
#define PWTAME_TREE_MODEL_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/tree/monomial_basis.h"
#include "pwtame/tree/tree_shape.h"

namespace pwtame::tree {

enum class SplitKind { kAxisAligned, kHyperplane };

std::string SplitKindName(SplitKind kind);
absl::StatusOr<SplitKind> ParseSplitKind(absl::string_view name);

// Branch condition a^T x < b sends a point left.
struct Split {
  std::vector<double> a;
  double b = 0.0;
};

struct Leaf {
  std::vector<double> coeffs;
  bool active = true;
};

// Slack added to the axis-aligned comparison x_j + eps_j <= b so that the
// floating-point sum of a sample value and its increment still lands on the
// next sample value.
inline constexpr double kRouteTolerance = 1e-9;

// Piecewise polynomial regressor over a complete binary tree.
//
// Routing: at branch node m an axis-aligned split sends x left iff
// a_m^T x + a_m^T eps <= b_m (mirroring the MIP's strict-inequality
// encoding); a hyperplane split sends x left iff a_m^T x < b_m. Subtrees that
// hold no active leaf are never entered: if the geometric branch leads into
// one, the point takes the other branch. A model without any active leaf
// cannot route.
class PwPolyModel {
 public:
  static absl::StatusOr<PwPolyModel> Create(int depth, int dimension,
                                            int degree, SplitKind kind,
                                            std::vector<double> epsilon,
                                            std::vector<Split> splits,
                                            std::vector<Leaf> leaves);

  // Single active leaf holding `coeffs`.
  static absl::StatusOr<PwPolyModel> Constant(int dimension, int degree,
                                              std::vector<double> coeffs);

  const TreeShape& shape() const { return shape_; }
  const MonomialBasis& basis() const { return basis_; }
  int depth() const { return shape_.depth(); }
  int dimension() const { return basis_.dimension(); }
  int degree() const { return basis_.degree(); }
  SplitKind split_kind() const { return kind_; }
  std::span<const double> epsilon() const { return epsilon_; }
  const Split& split(int node) const { return splits_[node - 1]; }
  const Leaf& leaf(int node) const {
    return leaves_[node - shape_.first_leaf()];
  }
  std::span<const Split> splits() const { return splits_; }
  std::span<const Leaf> leaves() const { return leaves_; }

  // Geometric branch decision at node m, ignoring leaf activity.
  bool GoesLeft(int node, std::span<const double> x) const;

  absl::StatusOr<int> Route(std::span<const double> x) const;
  absl::StatusOr<double> Predict(std::span<const double> x) const;

  // The same function as a depth-`depth` tree: every old leaf becomes a
  // subtree whose descendants all carry the old leaf's polynomial.
  absl::StatusOr<PwPolyModel> Deepen(int depth) const;

 private:
  PwPolyModel(TreeShape shape, MonomialBasis basis, SplitKind kind,
              std::vector<double> epsilon, std::vector<Split> splits,
              std::vector<Leaf> leaves);

  TreeShape shape_;
  MonomialBasis basis_;
  SplitKind kind_;
  std::vector<double> epsilon_;
  std::vector<Split> splits_;
  std::vector<Leaf> leaves_;
  // Per node (1-based), whether its subtree holds an active leaf.
  std::vector<char> live_;
};

}  // namespace pwtame::tree

#endif  // PWTAME_TREE_MODEL_H_

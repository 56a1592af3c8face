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

#include "pwtame/tree/model.h"

#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"

namespace pwtame::tree {

namespace {

constexpr double kBoundTolerance = 1e-9;
constexpr double kNormTolerance = 1e-6;

double Dot(std::span<const double> a, std::span<const double> x) {
  double s = 0.0;
  for (size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
  return s;
}

}  // namespace

std::string SplitKindName(SplitKind kind) {
  return kind == SplitKind::kAxisAligned ? "axis_aligned" : "hyperplane";
}

absl::StatusOr<SplitKind> ParseSplitKind(absl::string_view name) {
  if (name == "axis_aligned" || name == "axis") return SplitKind::kAxisAligned;
  if (name == "hyperplane" || name == "hplane") return SplitKind::kHyperplane;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown split kind '", name, "'"));
}

PwPolyModel::PwPolyModel(TreeShape shape, MonomialBasis basis, SplitKind kind,
                         std::vector<double> epsilon, std::vector<Split> splits,
                         std::vector<Leaf> leaves)
    : shape_(std::move(shape)),
      basis_(std::move(basis)),
      kind_(kind),
      epsilon_(std::move(epsilon)),
      splits_(std::move(splits)),
      leaves_(std::move(leaves)),
      live_(shape_.num_nodes() + 1, 0) {
  for (int t = shape_.last_leaf(); t >= 1; --t) {
    live_[t] = shape_.is_leaf(t)
                   ? leaves_[t - shape_.first_leaf()].active
                   : (live_[TreeShape::left(t)] || live_[TreeShape::right(t)]);
  }
}

absl::StatusOr<PwPolyModel> PwPolyModel::Create(
    int depth, int dimension, int degree, SplitKind kind,
    std::vector<double> epsilon, std::vector<Split> splits,
    std::vector<Leaf> leaves) {
  absl::StatusOr<TreeShape> shape = TreeShape::Create(depth);
  if (!shape.ok()) return shape.status();
  if (dimension < 1 || degree < 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "bad model dimension ", dimension, " or degree ", degree));
  }
  MonomialBasis basis(dimension, degree);
  if (static_cast<int>(epsilon.size()) != dimension) {
    return absl::InvalidArgumentError(absl::StrCat(
        "epsilon has ", epsilon.size(), " entries, expected ", dimension));
  }
  for (double e : epsilon) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      return absl::InvalidArgumentError("epsilon entries must be positive");
    }
  }
  if (static_cast<int>(splits.size()) != shape->num_branch_nodes()) {
    return absl::InvalidArgumentError(
        absl::StrCat("model has ", splits.size(), " splits, depth ", depth,
                     " needs ", shape->num_branch_nodes()));
  }
  for (size_t m = 0; m < splits.size(); ++m) {
    const Split& s = splits[m];
    const std::string where = absl::StrCat("split at node ", m + 1);
    if (static_cast<int>(s.a.size()) != dimension || !std::isfinite(s.b)) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, " has the wrong dimension or a non-finite b"));
    }
    if (kind == SplitKind::kAxisAligned) {
      int ones = 0;
      for (double v : s.a) {
        if (v == 1.0) {
          ++ones;
        } else if (v != 0.0) {
          ones = -1;
          break;
        }
      }
      if (ones != 1) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, " is not a unit coordinate vector"));
      }
      if (s.b < -kBoundTolerance || s.b > 1.0 + kBoundTolerance) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, " has b=", s.b, " outside [0,1]"));
      }
    } else {
      double norm = 0.0;
      for (double v : s.a) norm += std::abs(v);
      if (std::abs(norm - 1.0) > kNormTolerance) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, " has |a|_1=", norm, ", expected 1"));
      }
      if (s.b < -1.0 - kBoundTolerance || s.b > 1.0 + kBoundTolerance) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, " has b=", s.b, " outside [-1,1]"));
      }
    }
  }
  if (static_cast<int>(leaves.size()) != shape->num_leaves()) {
    return absl::InvalidArgumentError(
        absl::StrCat("model has ", leaves.size(), " leaves, depth ", depth,
                     " needs ", shape->num_leaves()));
  }
  for (size_t t = 0; t < leaves.size(); ++t) {
    if (static_cast<int>(leaves[t].coeffs.size()) != basis.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "leaf ", shape->first_leaf() + t, " has ", leaves[t].coeffs.size(),
          " coefficients, the degree-", degree, " basis has ", basis.size()));
    }
    for (double c : leaves[t].coeffs) {
      if (!std::isfinite(c)) {
        return absl::InvalidArgumentError("leaf coefficients must be finite");
      }
    }
  }
  return PwPolyModel(*std::move(shape), std::move(basis), kind,
                     std::move(epsilon), std::move(splits), std::move(leaves));
}

absl::StatusOr<PwPolyModel> PwPolyModel::Constant(int dimension, int degree,
                                                  std::vector<double> coeffs) {
  return Create(0, dimension, degree, SplitKind::kAxisAligned,
                std::vector<double>(dimension, 1.0), {},
                {Leaf{std::move(coeffs), true}});
}

bool PwPolyModel::GoesLeft(int node, std::span<const double> x) const {
  const Split& s = splits_[node - 1];
  if (kind_ == SplitKind::kAxisAligned) {
    return Dot(s.a, x) + Dot(s.a, epsilon_) <= s.b + kRouteTolerance;
  }
  return Dot(s.a, x) < s.b;
}

absl::StatusOr<int> PwPolyModel::Route(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "point has dimension ", x.size(), ", model expects ", dimension()));
  }
  if (!live_[1]) {
    return absl::FailedPreconditionError(
        "model integrity: no active leaf to route to");
  }
  int t = 1;
  while (!shape_.is_leaf(t)) {
    const int preferred =
        GoesLeft(t, x) ? TreeShape::left(t) : TreeShape::right(t);
    t = live_[preferred] ? preferred : (preferred ^ 1);
  }
  return t;
}

absl::StatusOr<double> PwPolyModel::Predict(std::span<const double> x) const {
  absl::StatusOr<int> t = Route(x);
  if (!t.ok()) return t.status();
  return EvalPoly(leaf(*t).coeffs, basis_, x);
}

absl::StatusOr<PwPolyModel> PwPolyModel::Deepen(int depth) const {
  if (depth < this->depth()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cannot embed a depth-", this->depth(), " model at depth ", depth));
  }
  absl::StatusOr<TreeShape> deeper = TreeShape::Create(depth);
  if (!deeper.ok()) return deeper.status();
  const int shift = depth - this->depth();
  std::vector<Split> splits(deeper->num_branch_nodes());
  for (int m = 1; m <= deeper->num_branch_nodes(); ++m) {
    if (m < shape_.first_leaf()) {
      splits[m - 1] = splits_[m - 1];
    } else {
      // Filler split; both sides carry the same polynomial.
      Split filler;
      filler.a.assign(dimension(), 0.0);
      filler.a[0] = 1.0;
      filler.b = 0.5;
      splits[m - 1] = std::move(filler);
    }
  }
  std::vector<Leaf> leaves(deeper->num_leaves());
  for (int t = deeper->first_leaf(); t <= deeper->last_leaf(); ++t) {
    leaves[t - deeper->first_leaf()] = leaf(t >> shift);
  }
  return Create(depth, dimension(), degree(), kind_, epsilon_,
                std::move(splits), std::move(leaves));
}

}  // namespace pwtame::tree

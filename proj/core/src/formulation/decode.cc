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

#include "pwtame/formulation/decode.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "pwtame/formulation/epsilon.h"
#include "pwtame/tree/monomial_basis.h"
#include "pwtame/tree/tree_shape.h"

namespace pwtame::formulation {

namespace {

std::string Name(absl::string_view stem, std::initializer_list<int> indices) {
  return SymbolInstance{std::string(stem), indices}.Name();
}

absl::StatusOr<int> Require(const MipModel& model, const std::string& name) {
  const int var = model.FindVariable(name);
  if (var < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("model has no variable ", name));
  }
  return var;
}

bool InSubtree(int node, int root) {
  while (node > root) node /= 2;
  return node == root;
}

double Dot(std::span<const double> a, std::span<const double> x) {
  double s = 0.0;
  for (size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
  return s;
}

}  // namespace

double SimplestDecimalIn(double lo, double hi) {
  if (!(lo <= hi)) return 0.5 * (lo + hi);
  const double mid = 0.5 * (lo + hi);
  // Grids 1, 1/2, 1/10, 1/20, 1/100, ...: value = q / denominator.
  double p = 1.0;
  for (int k = 0; k <= 15; ++k, p *= 10.0) {
    for (const double denominator : {p, 2.0 * p}) {
      const double q0 = std::clamp(std::round(mid * denominator),
                                   std::floor(lo * denominator) - 1.0,
                                   std::ceil(hi * denominator) + 1.0);
      double best = std::numeric_limits<double>::quiet_NaN();
      for (double q = q0 - 2.0; q <= q0 + 2.0; q += 1.0) {
        const double v = q / denominator;
        if (v < lo || v > hi) continue;
        if (std::isnan(best) || std::abs(v - mid) < std::abs(best - mid)) {
          best = v;
        }
      }
      if (!std::isnan(best)) return best;
    }
  }
  return mid;
}

absl::StatusOr<tree::PwPolyModel> Decode(const MipModel& model,
                                         const Assignment& assignment,
                                         const functions::SampleSet& samples,
                                         const Hyperparams& params) {
  if (static_cast<int>(assignment.values.size()) != model.num_variables()) {
    return absl::InvalidArgumentError("assignment does not match the model");
  }
  absl::StatusOr<tree::TreeShape> shape = tree::TreeShape::Create(params.depth);
  if (!shape.ok()) return shape.status();
  const int n = samples.size();
  const int d = samples.dimension;
  const tree::MonomialBasis basis(d, params.degree);
  const int K = basis.size();
  const bool hyperplane = model.FindVariable(Name("o", {1, 1})) >= 0;
  const EpsilonInfo eps = ComputeEpsilon(samples);
  auto value = [&](int var) { return assignment.values[var]; };

  // Leaf of every training point.
  std::vector<int> leaf_of(n, -1);
  std::vector<int> count(shape->num_leaves(), 0);
  for (int i = 0; i < n; ++i) {
    double best = -1.0;
    for (int t : shape->leaves()) {
      absl::StatusOr<int> z = Require(model, Name("z", {i + 1, t}));
      if (!z.ok()) return z.status();
      if (value(*z) > best) {
        best = value(*z);
        leaf_of[i] = t;
      }
    }
    if (best < 0.5) {
      return absl::FailedPreconditionError(
          absl::StrCat("point ", i + 1, " is not assigned to a leaf"));
    }
    ++count[shape->leaf_position(leaf_of[i])];
  }

  std::vector<tree::Split> splits;
  for (int m : shape->branch_nodes()) {
    tree::Split split;
    split.a.assign(d, 0.0);
    for (int j = 0; j < d; ++j) {
      absl::StatusOr<int> a = Require(model, Name("a", {j + 1, m}));
      if (!a.ok()) return a.status();
      split.a[j] = value(*a);
    }
    absl::StatusOr<int> b_var = Require(model, Name("b", {m}));
    if (!b_var.ok()) return b_var.status();
    double b_lower = 0.0, b_upper = 1.0;
    if (hyperplane) {
      b_lower = -1.0;
      double norm = 0.0;
      for (double v : split.a) norm += std::abs(v);
      if (norm < 1e-9) {
        split.a.assign(d, 0.0);
        split.a[0] = 1.0;
      } else {
        for (double& v : split.a) v /= norm;
      }
    } else {
      const int dim = static_cast<int>(
          std::max_element(split.a.begin(), split.a.end()) - split.a.begin());
      split.a.assign(d, 0.0);
      split.a[dim] = 1.0;
    }
    const double eps_a = hyperplane ? 0.0 : Dot(split.a, eps.eps);
    double lo = b_lower, hi = b_upper;
    double lo_strict = b_lower;
    bool any_left = false;
    for (int i = 0; i < n; ++i) {
      const double ax = Dot(split.a, samples.point(i));
      if (InSubtree(leaf_of[i], tree::TreeShape::left(m))) {
        any_left = true;
        lo_strict = std::max(lo_strict, ax);
        lo = std::max(lo, hyperplane ? ax + params.mu : ax + eps_a);
      } else if (InSubtree(leaf_of[i], tree::TreeShape::right(m))) {
        hi = std::min(hi, ax);
      }
    }
    if (lo <= hi) {
      split.b = SimplestDecimalIn(lo, hi);
    } else if (hyperplane && lo_strict < hi) {
      split.b = SimplestDecimalIn(0.5 * (lo_strict + hi), hi);
    } else {
      split.b = std::clamp(value(*b_var), b_lower, b_upper);
    }
    if (hyperplane && any_left && split.b <= lo_strict) {
      split.b = std::min(b_upper, std::nextafter(lo_strict, b_upper));
    }
    splits.push_back(std::move(split));
  }

  std::vector<tree::Leaf> leaves;
  for (int t : shape->leaves()) {
    tree::Leaf leaf;
    leaf.coeffs.assign(K, 0.0);
    leaf.active = count[shape->leaf_position(t)] > 0;
    if (leaf.active) {
      for (int k = 0; k < K; ++k) {
        absl::StatusOr<int> c = Require(model, Name("c", {t, k}));
        if (!c.ok()) return c.status();
        leaf.coeffs[k] = value(*c);
      }
    }
    leaves.push_back(std::move(leaf));
  }

  absl::StatusOr<tree::PwPolyModel> out = tree::PwPolyModel::Create(
      params.depth, d, params.degree,
      hyperplane ? tree::SplitKind::kHyperplane : tree::SplitKind::kAxisAligned,
      eps.eps, std::move(splits), std::move(leaves));
  if (!out.ok()) return out.status();
  for (int i = 0; i < n; ++i) {
    absl::StatusOr<int> routed = out->Route(samples.point(i));
    if (!routed.ok()) return routed.status();
    if (*routed != leaf_of[i]) {
      return absl::InternalError(
          absl::StrCat("decoded tree routes point ", i + 1, " to leaf ",
                       *routed, " but the assignment puts it in leaf ",
                       leaf_of[i]));
    }
  }
  return out;
}

absl::StatusOr<Assignment> Encode(const MipModel& model,
                                  const tree::PwPolyModel& tree_model,
                                  const functions::SampleSet& samples) {
  if (samples.dimension != tree_model.dimension()) {
    return absl::InvalidArgumentError("sample and model dimensions differ");
  }
  const tree::TreeShape& shape = tree_model.shape();
  const int n = samples.size();
  const int d = samples.dimension;
  const bool hyperplane = model.FindVariable(Name("o", {1, 1})) >= 0;
  if (hyperplane !=
      (tree_model.split_kind() == tree::SplitKind::kHyperplane) &&
      shape.depth() > 0) {
    return absl::InvalidArgumentError(
        "tree split kind does not match the formulation");
  }
  Assignment out = Assignment::Empty(model);
  auto set = [&](const std::string& name, double v) -> absl::Status {
    absl::StatusOr<int> var = Require(model, name);
    if (!var.ok()) return var.status();
    out.values[*var] = v;
    return absl::OkStatus();
  };

  for (int m : shape.branch_nodes()) {
    const tree::Split& split = tree_model.split(m);
    for (int j = 0; j < d; ++j) {
      const double a = split.a[j];
      if (absl::Status s = set(Name("a", {j + 1, m}), a); !s.ok()) return s;
      if (hyperplane) {
        if (absl::Status s = set(Name("ap", {j + 1, m}), std::max(a, 0.0));
            !s.ok()) {
          return s;
        }
        if (absl::Status s = set(Name("am", {j + 1, m}), std::max(-a, 0.0));
            !s.ok()) {
          return s;
        }
        if (absl::Status s = set(Name("o", {j + 1, m}), a < 0.0 ? 0.0 : 1.0);
            !s.ok()) {
          return s;
        }
      }
    }
    if (absl::Status s = set(Name("b", {m}), split.b); !s.ok()) return s;
  }

  std::vector<int> leaf_of(n);
  std::vector<int> count(shape.num_leaves(), 0);
  for (int i = 0; i < n; ++i) {
    absl::StatusOr<int> t = tree_model.Route(samples.point(i));
    if (!t.ok()) return t.status();
    leaf_of[i] = *t;
    ++count[shape.leaf_position(*t)];
  }
  for (int t : shape.leaves()) {
    const tree::Leaf& leaf = tree_model.leaf(t);
    if (absl::Status s =
            set(Name("l", {t}), count[shape.leaf_position(t)] > 0 ? 1.0 : 0.0);
        !s.ok()) {
      return s;
    }
    for (int k = 0; k < static_cast<int>(leaf.coeffs.size()); ++k) {
      if (absl::Status s = set(Name("c", {t, k}), leaf.coeffs[k]); !s.ok()) {
        return s;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto x = samples.point(i);
    for (int t : shape.leaves()) {
      if (absl::Status s =
              set(Name("z", {i + 1, t}), t == leaf_of[i] ? 1.0 : 0.0);
          !s.ok()) {
        return s;
      }
      absl::StatusOr<double> p =
          tree::EvalPoly(tree_model.leaf(t).coeffs, tree_model.basis(), x);
      if (!p.ok()) return p.status();
      const double phi = samples.values[i] - *p;
      if (absl::Status s = set(Name("phi", {i + 1, t}), phi); !s.ok()) {
        return s;
      }
      if (t == leaf_of[i]) {
        if (absl::Status s = set(Name("delta", {i + 1}), std::abs(phi));
            !s.ok()) {
          return s;
        }
      }
    }
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    if (!out.has(j)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "tree does not determine variable ", model.variable(j).name));
    }
  }
  return out;
}

}  // namespace pwtame::formulation

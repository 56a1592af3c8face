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

#include "pwtame/formulation/builder.h"

#include <cmath>
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

absl::Status ValidateInputs(const functions::SampleSet& samples,
                            const Hyperparams& params) {
  if (absl::Status status = params.Validate(); !status.ok()) return status;
  if (samples.size() == 0) {
    return absl::InvalidArgumentError("cannot build a model from no samples");
  }
  if (samples.size() < params.min_leaf_points) {
    return absl::InvalidArgumentError(
        absl::StrCat("n = ", samples.size(), " is smaller than N_min = ",
                     params.min_leaf_points));
  }
  for (double v : samples.points) {
    if (!(v >= 0.0 && v <= 1.0)) {
      return absl::InvalidArgumentError(
          "sample coordinates must lie in [0, 1]");
    }
  }
  for (double y : samples.values) {
    if (!std::isfinite(y)) {
      return absl::InvalidArgumentError("sample values must be finite");
    }
  }
  return absl::OkStatus();
}

// Split variables of one branch node.
struct SplitVars {
  std::vector<int> a;
  int b = -1;
};

absl::StatusOr<MipModel> Build(FormulationKind kind,
                               const functions::SampleSet& samples,
                               const Hyperparams& params) {
  if (absl::Status status = ValidateInputs(samples, params); !status.ok()) {
    return status;
  }
  absl::StatusOr<tree::TreeShape> shape = tree::TreeShape::Create(params.depth);
  if (!shape.ok()) return shape.status();
  absl::StatusOr<BigM> big_m = ResolveBigM(samples, params);
  if (!big_m.ok()) return big_m.status();

  const int n = samples.size();
  const int d = samples.dimension;
  const tree::MonomialBasis basis(d, params.degree);
  const int K = basis.size();
  const EpsilonInfo eps = ComputeEpsilon(samples);
  const double M = big_m->big_m;
  const double C = big_m->coeff_bound;
  const bool axis = kind == FormulationKind::kAxisAligned;

  MipModel model;

  // Split block.
  std::vector<SplitVars> split(shape->num_branch_nodes() + 1);
  if (axis) {
    for (int m : shape->branch_nodes()) {
      for (int j = 1; j <= d; ++j) {
        split[m].a.push_back(model.AddBinary(Name("a", {j, m})));
      }
    }
  } else {
    std::vector<std::vector<int>> o(split.size()), ap(split.size()),
        am(split.size());
    for (int m : shape->branch_nodes()) {
      for (int j = 1; j <= d; ++j) {
        o[m].push_back(model.AddBinary(Name("o", {j, m})));
      }
    }
    for (int m : shape->branch_nodes()) {
      for (int j = 1; j <= d; ++j) {
        split[m].a.push_back(model.AddVariable(Name("a", {j, m}), -1.0, 1.0,
                                               VarType::kContinuous));
        ap[m].push_back(model.AddVariable(Name("ap", {j, m}), 0.0, 1.0,
                                          VarType::kContinuous));
        am[m].push_back(model.AddVariable(Name("am", {j, m}), 0.0, 1.0,
                                          VarType::kContinuous));
      }
    }
    for (int m : shape->branch_nodes()) {
      std::vector<Term> norm;
      for (int j = 0; j < d; ++j) {
        norm.push_back({ap[m][j], 1.0});
        norm.push_back({am[m][j], 1.0});
      }
      model.AddConstraint(Name("anorm", {m}), std::move(norm), Sense::kEqual,
                          1.0);
      for (int j = 0; j < d; ++j) {
        model.AddConstraint(
            Name("asplit", {j + 1, m}),
            {{split[m].a[j], 1.0}, {ap[m][j], -1.0}, {am[m][j], 1.0}},
            Sense::kEqual, 0.0);
        model.AddConstraint(Name("apos", {j + 1, m}),
                            {{ap[m][j], 1.0}, {o[m][j], -1.0}},
                            Sense::kLessEqual, 0.0);
        model.AddConstraint(Name("aneg", {j + 1, m}),
                            {{am[m][j], 1.0}, {o[m][j], 1.0}},
                            Sense::kLessEqual, 1.0);
      }
    }
  }
  for (int m : shape->branch_nodes()) {
    split[m].b = axis ? model.AddVariable(Name("b", {m}), 0.0, 1.0,
                                          VarType::kContinuous)
                      : model.AddVariable(Name("b", {m}), -1.0, 1.0,
                                          VarType::kContinuous);
  }
  if (axis) {
    for (int m : shape->branch_nodes()) {
      std::vector<Term> sum;
      for (int var : split[m].a) sum.push_back({var, 1.0});
      model.AddConstraint(Name("asum", {m}), std::move(sum), Sense::kEqual,
                          1.0);
    }
  }

  const int L = shape->num_leaves();
  auto pos = [&](int t) { return shape->leaf_position(t); };
  std::vector<int> l(L);
  for (int t : shape->leaves()) l[pos(t)] = model.AddBinary(Name("l", {t}));
  std::vector<int> z(static_cast<size_t>(n) * L);
  for (int i = 0; i < n; ++i) {
    for (int t : shape->leaves()) {
      z[static_cast<size_t>(i) * L + pos(t)] =
          model.AddBinary(Name("z", {i + 1, t}));
    }
  }
  std::vector<int> c(static_cast<size_t>(L) * K);
  for (int t : shape->leaves()) {
    for (int k = 0; k < K; ++k) {
      c[static_cast<size_t>(pos(t)) * K + k] =
          model.AddVariable(Name("c", {t, k}), -C, C, VarType::kContinuous);
    }
  }
  std::vector<int> phi(static_cast<size_t>(n) * L);
  for (int i = 0; i < n; ++i) {
    for (int t : shape->leaves()) {
      phi[static_cast<size_t>(i) * L + pos(t)] = model.AddVariable(
          Name("phi", {i + 1, t}), -kInfinity, kInfinity, VarType::kContinuous);
    }
  }
  std::vector<int> delta(n);
  for (int i = 0; i < n; ++i) {
    delta[i] = model.AddVariable(Name("delta", {i + 1}), 0.0, kInfinity,
                                 VarType::kContinuous);
    model.SetObjective(delta[i], 1.0 / n);
  }

  std::vector<double> monomials(K);
  for (int i = 0; i < n; ++i) {
    const auto x = samples.point(i);
    basis.Evaluate(x, monomials);
    for (int t : shape->leaves()) {
      const int zi = z[static_cast<size_t>(i) * L + pos(t)];
      const int phii = phi[static_cast<size_t>(i) * L + pos(t)];
      model.AddConstraint(Name("dpos", {i + 1, t}),
                          {{delta[i], 1.0}, {phii, -1.0}, {zi, -M}},
                          Sense::kGreaterEqual, -M);
      model.AddConstraint(Name("dneg", {i + 1, t}),
                          {{delta[i], 1.0}, {phii, 1.0}, {zi, -M}},
                          Sense::kGreaterEqual, -M);
      std::vector<Term> fit{{phii, 1.0}};
      for (int k = 0; k < K; ++k) {
        if (monomials[k] != 0.0) {
          fit.push_back({c[static_cast<size_t>(pos(t)) * K + k], monomials[k]});
        }
      }
      model.AddConstraint(Name("phi", {i + 1, t}), std::move(fit),
                          Sense::kEqual, samples.values[i]);

      for (int m : shape->right_ancestors(t)) {
        std::vector<Term> row;
        for (int j = 0; j < d; ++j) {
          if (x[j] != 0.0) row.push_back({split[m].a[j], x[j]});
        }
        row.push_back({split[m].b, -1.0});
        if (axis) {
          row.push_back({zi, -1.0});
          model.AddConstraint(Name("right", {i + 1, t, m}), std::move(row),
                              Sense::kGreaterEqual, -1.0);
        } else {
          row.push_back({zi, -2.0});
          model.AddConstraint(Name("right", {i + 1, t, m}), std::move(row),
                              Sense::kGreaterEqual, -2.0);
        }
      }
      for (int m : shape->left_ancestors(t)) {
        std::vector<Term> row;
        if (axis) {
          for (int j = 0; j < d; ++j) {
            row.push_back({split[m].a[j], x[j] + eps.eps[j]});
          }
          row.push_back({split[m].b, -1.0});
          row.push_back({zi, 1.0 + eps.eps_max});
          model.AddConstraint(Name("left", {i + 1, t, m}), std::move(row),
                              Sense::kLessEqual, 1.0 + eps.eps_max);
        } else {
          for (int j = 0; j < d; ++j) {
            if (x[j] != 0.0) row.push_back({split[m].a[j], x[j]});
          }
          row.push_back({split[m].b, -1.0});
          row.push_back({zi, 2.0 + params.mu});
          // a^T x + mu <= b + (2 + mu)(1 - z)  <=>  a^T x - b + (2+mu) z <= 2.
          model.AddConstraint(Name("left", {i + 1, t, m}), std::move(row),
                              Sense::kLessEqual, 2.0);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Term> row;
    for (int t : shape->leaves()) {
      row.push_back({z[static_cast<size_t>(i) * L + pos(t)], 1.0});
    }
    model.AddConstraint(Name("assign", {i + 1}), std::move(row), Sense::kEqual,
                        1.0);
  }
  for (int i = 0; i < n; ++i) {
    for (int t : shape->leaves()) {
      model.AddConstraint(Name("zl", {i + 1, t}),
                          {{z[static_cast<size_t>(i) * L + pos(t)], 1.0},
                           {l[pos(t)], -1.0}},
                          Sense::kLessEqual, 0.0);
    }
  }
  for (int t : shape->leaves()) {
    std::vector<Term> row;
    for (int i = 0; i < n; ++i) {
      row.push_back({z[static_cast<size_t>(i) * L + pos(t)], 1.0});
    }
    row.push_back({l[pos(t)], -static_cast<double>(params.min_leaf_points)});
    model.AddConstraint(Name("nmin", {t}), std::move(row), Sense::kGreaterEqual,
                        0.0);
  }
  return model;
}

}  // namespace

absl::StatusOr<MipModel> BuildAxisAligned(const functions::SampleSet& samples,
                                          const Hyperparams& params) {
  return Build(FormulationKind::kAxisAligned, samples, params);
}

absl::StatusOr<MipModel> BuildHyperplane(const functions::SampleSet& samples,
                                         const Hyperparams& params) {
  return Build(FormulationKind::kHyperplane, samples, params);
}

absl::StatusOr<MipModel> BuildFormulation(FormulationKind kind,
                                          const functions::SampleSet& samples,
                                          const Hyperparams& params) {
  return Build(kind, samples, params);
}

ModelSize ExpectedModelSize(FormulationKind kind, long long n, int d, int depth,
                            int degree) {
  const long long L = 1LL << depth;
  const long long B = L - 1;
  const long long K = tree::MonomialBasis::Count(d, degree);
  ModelSize size;
  size.binaries = n * L + L + d * B;
  const long long shared_vars = B + L + n * L + L * K + n * L + n;
  const long long shared_rows =
      2 * n * L + n * L + n * L * depth + n + n * L + L;
  if (kind == FormulationKind::kAxisAligned) {
    size.variables = d * B + shared_vars;
    size.constraints = shared_rows + B;
  } else {
    size.variables = 4 * d * B + shared_vars;
    size.constraints = shared_rows + B + 3 * d * B;
  }
  return size;
}

}  // namespace pwtame::formulation

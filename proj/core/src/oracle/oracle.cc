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

#include "pwtame/oracle/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "Eigen/Dense"
#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "pwtame/formulation/decode.h"
#include "pwtame/formulation/epsilon.h"
#include "pwtame/solver/lp.h"

namespace pwtame::oracle {

namespace {

using functions::SampleSet;

constexpr double kRouteTolerance = tree::kRouteTolerance;
constexpr double kTieTolerance = 1e-12;
constexpr double kRidge = 1e-10;

constexpr int kGuardPoints = 40;
constexpr int kGuardDepth = 2;
constexpr int kGuardDimension = 3;

// Point subset as a bitset over sample indices.
using Subset = std::vector<uint64_t>;

Subset MakeSubset(int n, std::span<const int> indices) {
  Subset s((n + 63) / 64, 0);
  for (int i : indices) s[i / 64] |= uint64_t{1} << (i % 64);
  return s;
}

std::vector<int> Members(const Subset& s) {
  std::vector<int> out;
  for (size_t w = 0; w < s.size(); ++w) {
    uint64_t bits = s[w];
    while (bits != 0) {
      const int b = __builtin_ctzll(bits);
      out.push_back(static_cast<int>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

double TotalLoss(const SampleSet& samples, std::span<const int> indices,
                 const tree::MonomialBasis& basis,
                 std::span<const double> coeffs, Loss loss) {
  double total = 0.0;
  std::vector<double> m(basis.size());
  for (int i : indices) {
    basis.Evaluate(samples.point(i), m);
    double p = 0.0;
    for (int k = 0; k < basis.size(); ++k) p += coeffs[k] * m[k];
    const double r = samples.values[i] - p;
    total += loss == Loss::kMae ? std::abs(r) : r * r;
  }
  return total;
}

struct Candidate {
  int dim = 0;
  double b = 0.0;
};

class Search {
 public:
  Search(const SampleSet& samples, const OracleOptions& options,
         std::vector<double> eps, const ThresholdSet& thresholds,
         double coeff_bound)
      : samples_(samples),
        options_(options),
        basis_(samples.dimension, options.degree),
        eps_(std::move(eps)),
        thresholds_(thresholds),
        coeff_bound_(coeff_bound) {}

  struct Entry {
    double loss = 0.0;
    bool feasible = true;
    // Branch: chosen split; leaf: fitted coefficients.
    Candidate split;
    std::vector<double> coeffs;
  };

  // Left/right parts of `s` under a candidate; false when a point would fall
  // in the gap between the two branch conditions.
  bool Partition(const Subset& s, const Candidate& c, Subset& left,
                 Subset& right) const {
    left.assign(s.size(), 0);
    right.assign(s.size(), 0);
    for (int i : Members(s)) {
      const double x = samples_.coordinate(i, c.dim);
      if (x + eps_[c.dim] <= c.b + kRouteTolerance) {
        left[i / 64] |= uint64_t{1} << (i % 64);
      } else if (x >= c.b) {
        right[i / 64] |= uint64_t{1} << (i % 64);
      } else {
        return false;
      }
    }
    return true;
  }

  absl::StatusOr<Entry> Solve(int height, const Subset& s) {
    auto key = std::make_pair(height, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Entry entry;
    const std::vector<int> members = Members(s);
    if (members.empty()) {
      entry.coeffs.assign(basis_.size(), 0.0);
      entry.split = Candidate{0, 0.5};
    } else if (height == 0) {
      if (static_cast<int>(members.size()) < options_.min_leaf_points) {
        entry.feasible = false;
      } else {
        absl::StatusOr<LeafFit> fit = FitLeaf(samples_, members, basis_,
                                              options_.loss, coeff_bound_);
        ++leaf_fits_;
        if (!fit.ok()) return fit.status();
        entry.loss = fit->loss;
        entry.coeffs = std::move(fit->coeffs);
      }
    } else {
      absl::StatusOr<Entry> best = Best(height, s, 0, 1);
      if (!best.ok()) return best.status();
      entry = *std::move(best);
    }
    memo_.emplace(std::move(key), entry);
    return entry;
  }

  // Best split of `s` among the candidates whose index is congruent to
  // `offset` modulo `stride`.
  absl::StatusOr<Entry> Best(int height, const Subset& s, int offset,
                             int stride, int* best_index = nullptr) {
    Entry best;
    best.feasible = false;
    int index = -1;
    Subset left, right;
    std::vector<Subset> seen;
    for (int j = 0; j < samples_.dimension; ++j) {
      for (double b : thresholds_.per_dimension[j]) {
        ++index;
        if (index % stride != offset) continue;
        const Candidate c{j, b};
        if (!Partition(s, c, left, right)) continue;
        if (std::find(seen.begin(), seen.end(), left) != seen.end()) continue;
        seen.push_back(left);
        ++partitions_;
        absl::StatusOr<Entry> l = Solve(height - 1, left);
        if (!l.ok()) return l.status();
        if (!l->feasible) continue;
        if (best.feasible && l->loss >= best.loss - kTieTolerance) continue;
        absl::StatusOr<Entry> r = Solve(height - 1, right);
        if (!r.ok()) return r.status();
        if (!r->feasible) continue;
        const double loss = l->loss + r->loss;
        if (!best.feasible || loss < best.loss - kTieTolerance) {
          best.feasible = true;
          best.loss = loss;
          best.split = c;
          if (best_index) *best_index = index;
          if (loss <= kTieTolerance) return best;
        }
      }
    }
    return best;
  }

  // Writes the subtree rooted at heap node `node` into splits/leaves.
  absl::Status Build(int node, int height, const Subset& s,
                     std::vector<tree::Split>& splits,
                     std::vector<tree::Leaf>& leaves, int first_leaf) {
    absl::StatusOr<Entry> e = Solve(height, s);
    if (!e.ok()) return e.status();
    if (height == 0) {
      tree::Leaf& leaf = leaves[node - first_leaf];
      leaf.active = !Members(s).empty();
      leaf.coeffs = leaf.active ? e->coeffs
                                : std::vector<double>(basis_.size(), 0.0);
      return absl::OkStatus();
    }
    tree::Split& split = splits[node - 1];
    split.a.assign(samples_.dimension, 0.0);
    split.a[e->split.dim] = 1.0;
    Subset left, right;
    if (!Partition(s, e->split, left, right)) {
      return absl::InternalError("memoized split no longer partitions");
    }
    // Canonical threshold within the admissible interval.
    double lo = 0.0, hi = 1.0;
    for (int i : Members(left)) {
      lo = std::max(lo, samples_.coordinate(i, e->split.dim) + eps_[e->split.dim]);
    }
    for (int i : Members(right)) {
      hi = std::min(hi, samples_.coordinate(i, e->split.dim));
    }
    split.b = lo <= hi ? formulation::SimplestDecimalIn(lo, hi) : e->split.b;
    if (absl::Status st = Build(2 * node, height - 1, left, splits, leaves,
                                first_leaf);
        !st.ok()) {
      return st;
    }
    return Build(2 * node + 1, height - 1, right, splits, leaves, first_leaf);
  }

  // Records an externally computed best split of `s`.
  void Seed(int height, const Subset& s, Entry entry) {
    memo_.insert_or_assign(std::make_pair(height, s), std::move(entry));
  }

  const tree::MonomialBasis& basis() const { return basis_; }
  const std::vector<double>& eps() const { return eps_; }
  int64_t leaf_fits() const { return leaf_fits_; }
  int64_t partitions() const { return partitions_; }

 private:
  const SampleSet& samples_;
  const OracleOptions& options_;
  tree::MonomialBasis basis_;
  std::vector<double> eps_;
  const ThresholdSet& thresholds_;
  double coeff_bound_;
  absl::flat_hash_map<std::pair<int, Subset>, Entry> memo_;
  int64_t leaf_fits_ = 0;
  int64_t partitions_ = 0;
};

}  // namespace

std::string LossName(Loss loss) { return loss == Loss::kMae ? "mae" : "mse"; }

absl::StatusOr<Loss> ParseLoss(absl::string_view name) {
  if (name == "mae") return Loss::kMae;
  if (name == "mse") return Loss::kMse;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown loss '", name, "' (mae|mse)"));
}

absl::StatusOr<LeafFit> FitLeaf(const SampleSet& samples,
                                std::span<const int> indices,
                                const tree::MonomialBasis& basis, Loss loss,
                                double coeff_bound) {
  if (indices.empty()) {
    return absl::InvalidArgumentError("cannot fit a leaf without points");
  }
  const int K = basis.size();
  const int s = static_cast<int>(indices.size());
  LeafFit fit;
  if (loss == Loss::kMse) {
    Eigen::MatrixXd A(s, K);
    Eigen::VectorXd y(s);
    std::vector<double> m(K);
    for (int r = 0; r < s; ++r) {
      basis.Evaluate(samples.point(indices[r]), m);
      for (int k = 0; k < K; ++k) A(r, k) = m[k];
      y(r) = samples.values[indices[r]];
    }
    const Eigen::MatrixXd normal = A.transpose() * A;
    const Eigen::VectorXd rhs = A.transpose() * y;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
    const bool singular =
        ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        ldlt.vectorD().cwiseAbs().minCoeff() <=
            1e-12 * std::max(1.0, ldlt.vectorD().cwiseAbs().maxCoeff());
    Eigen::VectorXd c;
    if (singular) {
      const Eigen::MatrixXd ridge =
          normal + kRidge * Eigen::MatrixXd::Identity(K, K);
      c = ridge.ldlt().solve(rhs);
    } else {
      c = ldlt.solve(rhs);
    }
    fit.coeffs.assign(c.data(), c.data() + K);
  } else {
    // min sum e_i  s.t.  e_i >= |y_i - c^T m(x_i)|, |c_k| <= coeff_bound.
    solver::LpProblem lp;
    for (int k = 0; k < K; ++k) {
      lp.cost.push_back(0.0);
      lp.lower.push_back(-coeff_bound);
      lp.upper.push_back(coeff_bound);
    }
    for (int r = 0; r < s; ++r) {
      lp.cost.push_back(1.0);
      lp.lower.push_back(0.0);
      lp.upper.push_back(solver::kInfinity);
    }
    std::vector<double> m(K);
    for (int r = 0; r < s; ++r) {
      basis.Evaluate(samples.point(indices[r]), m);
      const double y = samples.values[indices[r]];
      solver::LpRow above, below;
      above.terms.push_back({K + r, 1.0});
      below.terms.push_back({K + r, 1.0});
      for (int k = 0; k < K; ++k) {
        if (m[k] == 0.0) continue;
        above.terms.push_back({k, m[k]});
        below.terms.push_back({k, -m[k]});
      }
      above.lower = y;
      below.lower = -y;
      lp.rows.push_back(std::move(above));
      lp.rows.push_back(std::move(below));
    }
    absl::StatusOr<solver::LpResult> result = solver::SolveLp(lp);
    if (!result.ok()) return result.status();
    if (result->status != solver::LpStatus::kOptimal) {
      return absl::InternalError(absl::StrCat(
          "LAD leaf LP ended ", solver::LpStatusName(result->status)));
    }
    fit.coeffs.assign(result->x.begin(), result->x.begin() + K);
  }
  fit.loss = TotalLoss(samples, indices, basis, fit.coeffs, loss);
  return fit;
}

ThresholdSet BuildThresholdSet(const SampleSet& samples,
                               std::span<const double> eps) {
  ThresholdSet set;
  for (int j = 0; j < samples.dimension; ++j) {
    std::vector<double> values;
    for (int i = 0; i < samples.size(); ++i) {
      values.push_back(samples.coordinate(i, j));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<double> t{0.0};
    for (size_t q = 1; q < values.size(); ++q) t.push_back(values[q]);
    if (!values.empty() && values.back() + eps[j] <= 1.0 + kRouteTolerance &&
        t.back() < 1.0) {
      t.push_back(1.0);
    }
    set.per_dimension.push_back(std::move(t));
  }
  return set;
}

absl::StatusOr<OracleResult> EnumerateAxisTrees(const SampleSet& samples,
                                                const OracleOptions& options) {
  const int n = samples.size();
  const int d = samples.dimension;
  if (n == 0) return absl::InvalidArgumentError("no samples");
  if (options.depth < 0 || options.depth > tree::kMaxDepth ||
      options.degree < 0 || options.min_leaf_points < 1 || options.threads < 1) {
    return absl::InvalidArgumentError("bad oracle options");
  }
  if (!options.override_guard &&
      (n > kGuardPoints || options.depth > kGuardDepth ||
       d > kGuardDimension)) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "exhaustive search is limited to n <= ", kGuardPoints, ", depth <= ",
        kGuardDepth, ", dimension <= ", kGuardDimension, " (got n = ", n,
        ", depth = ", options.depth, ", dimension = ", d,
        "); set override_guard to run anyway"));
  }
  double max_abs_y = 0.0;
  for (double y : samples.values) max_abs_y = std::max(max_abs_y, std::abs(y));
  const double coeff_bound =
      options.coeff_bound.value_or(10.0 * std::max(1.0, max_abs_y));
  const formulation::EpsilonInfo eps = formulation::ComputeEpsilon(samples);
  const ThresholdSet thresholds = BuildThresholdSet(samples, eps.eps);

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const Subset root = MakeSubset(n, all);

  Search search(samples, options, eps.eps, thresholds, coeff_bound);
  int64_t extra_fits = 0, extra_partitions = 0;
  if (options.threads > 1 && options.depth > 0) {
    // Each worker scans a stride of the root candidates with its own memo;
    // the lowest (loss, candidate index) wins, as in the sequential scan.
    const int T = options.threads;
    std::vector<absl::StatusOr<Search::Entry>> results(
        T, absl::UnknownError("not run"));
    std::vector<int> indices(T, -1);
    std::vector<int64_t> fits(T), parts(T);
    std::vector<std::thread> workers;
    for (int t = 0; t < T; ++t) {
      workers.emplace_back([&, t] {
        Search local(samples, options, eps.eps, thresholds, coeff_bound);
        results[t] = local.Best(options.depth, root, t, T, &indices[t]);
        fits[t] = local.leaf_fits();
        parts[t] = local.partitions();
      });
    }
    for (std::thread& w : workers) w.join();
    for (int t = 0; t < T; ++t) {
      if (!results[t].ok()) return results[t].status();
      extra_fits += fits[t];
      extra_partitions += parts[t];
    }
    // Seed the main memo with the merged root decision.
    int winner = -1;
    for (int t = 0; t < T; ++t) {
      if (!results[t]->feasible) continue;
      if (winner < 0 ||
          results[t]->loss < results[winner]->loss - kTieTolerance ||
          (results[t]->loss <= results[winner]->loss + kTieTolerance &&
           indices[t] < indices[winner])) {
        winner = t;
      }
    }
    if (winner < 0) {
      return absl::NotFoundError(
          "no tree satisfies the N_min-or-empty leaf rule");
    }
    Search::Entry merged = *results[winner];
    search.Seed(options.depth, root, merged);
  }
  absl::StatusOr<Search::Entry> top = search.Solve(options.depth, root);
  if (!top.ok()) return top.status();
  if (!top->feasible) {
    return absl::NotFoundError("no tree satisfies the N_min-or-empty leaf rule");
  }
  absl::StatusOr<tree::TreeShape> shape = tree::TreeShape::Create(options.depth);
  if (!shape.ok()) return shape.status();
  std::vector<tree::Split> splits(shape->num_branch_nodes());
  std::vector<tree::Leaf> leaves(shape->num_leaves());
  if (absl::Status st =
          search.Build(1, options.depth, root, splits, leaves, shape->first_leaf());
      !st.ok()) {
    return st;
  }
  absl::StatusOr<tree::PwPolyModel> model = tree::PwPolyModel::Create(
      options.depth, d, options.degree, tree::SplitKind::kAxisAligned, eps.eps,
      std::move(splits), std::move(leaves));
  if (!model.ok()) return model.status();
  OracleResult result{*std::move(model), top->loss / n,
                      search.leaf_fits() + extra_fits,
                      search.partitions() + extra_partitions};
  return result;
}

}  // namespace pwtame::oracle

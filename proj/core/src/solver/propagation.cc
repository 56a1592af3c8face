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

#include "pwtame/solver/propagation.h"

#include <algorithm>
#include <cmath>

namespace pwtame::solver {

namespace {

using formulation::Constraint;
using formulation::kInfinity;
using formulation::Sense;
using formulation::Term;
using formulation::VarType;

// Implied bounds are loosened by this (relative) amount before use so that
// round-off never cuts off a feasible point.
constexpr double kSafety = 1e-9;
// Continuous bounds must move by at least this fraction of the box width (or
// absolute amount for unbounded boxes) to count as a change.
constexpr double kMinImprovement = 1e-3;
constexpr double kIntegralTolerance = 1e-6;
constexpr double kInfeasibility = 1e-6;
// Row visits per call, as a multiple of the row count.
constexpr int kWorkFactor = 20;

}  // namespace

BoundPropagator::BoundPropagator(const formulation::MipModel& model)
    : model_(model),
      rows_of_column_(model.num_variables()),
      binary_(model.num_variables(), 0) {
  for (int i = 0; i < model.num_constraints(); ++i) {
    for (const Term& t : model.constraint(i).terms) {
      rows_of_column_[t.var].push_back(i);
    }
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    binary_[j] = model.variable(j).type == VarType::kBinary;
  }
}

bool BoundPropagator::TightenRow(int row, std::vector<double>& lower,
                                 std::vector<double>& upper,
                                 std::vector<int>& changed) const {
  const Constraint& c = model_.constraint(row);
  const double row_lo = c.sense == Sense::kLessEqual ? -kInfinity : c.rhs;
  const double row_hi = c.sense == Sense::kGreaterEqual ? kInfinity : c.rhs;
  const double scale = 1.0 + std::abs(c.rhs);

  // Every move restarts the sweep with fresh activity sums; a binary moves
  // at most once and continuous moves are coarse, so this is bounded.
  for (int sweep = 0; sweep < 4 + 2 * static_cast<int>(c.terms.size());
       ++sweep) {
    // Activity range with infinite contributions counted separately.
    double min_act = 0.0, max_act = 0.0;
    int min_inf = 0, max_inf = 0;
    for (const Term& t : c.terms) {
      const double lo = t.coeff > 0 ? lower[t.var] : upper[t.var];
      const double hi = t.coeff > 0 ? upper[t.var] : lower[t.var];
      if (std::isinf(lo)) {
        ++min_inf;
      } else {
        min_act += t.coeff * lo;
      }
      if (std::isinf(hi)) {
        ++max_inf;
      } else {
        max_act += t.coeff * hi;
      }
    }
    if (min_inf == 0 && min_act > row_hi + kInfeasibility * scale) return false;
    if (max_inf == 0 && max_act < row_lo - kInfeasibility * scale) return false;

    bool moved = false;
    for (const Term& t : c.terms) {
      const int k = t.var;
      const double a = t.coeff;
      const double lo_k = a > 0 ? lower[k] : upper[k];
      const double hi_k = a > 0 ? upper[k] : lower[k];
      // Activity range of the other terms.
      double others_min = kInfinity, others_max = -kInfinity;
      if (min_inf == 0) {
        others_min = min_act - a * lo_k;
      } else if (min_inf == 1 && std::isinf(lo_k)) {
        others_min = min_act;
      }
      if (max_inf == 0) {
        others_max = max_act - a * hi_k;
      } else if (max_inf == 1 && std::isinf(hi_k)) {
        others_max = max_act;
      }
      // a x_k <= row_hi - others_min and a x_k >= row_lo - others_max.
      double new_lo = -kInfinity, new_hi = kInfinity;
      if (std::isfinite(row_hi) && std::isfinite(others_min)) {
        const double bound = (row_hi - others_min) / a;
        (a > 0 ? new_hi : new_lo) = bound;
      }
      if (std::isfinite(row_lo) && std::isfinite(others_max)) {
        const double bound = (row_lo - others_max) / a;
        if (a > 0) {
          new_lo = std::max(new_lo, bound);
        } else {
          new_hi = std::min(new_hi, bound);
        }
      }
      if (std::isfinite(new_hi)) new_hi += kSafety * (1.0 + std::abs(new_hi));
      if (std::isfinite(new_lo)) new_lo -= kSafety * (1.0 + std::abs(new_lo));

      if (binary_[k]) {
        new_hi = std::floor(new_hi + kIntegralTolerance);
        new_lo = std::ceil(new_lo - kIntegralTolerance);
        if (new_hi < upper[k]) {
          upper[k] = new_hi;
          moved = true;
        }
        if (new_lo > lower[k]) {
          lower[k] = new_lo;
          moved = true;
        }
        if (lower[k] > upper[k]) return false;
      } else {
        const double width = upper[k] - lower[k];
        const double step =
            kMinImprovement * (std::isfinite(width) ? std::max(width, 1e-6) : 1.0);
        const double slack = kInfeasibility * (1.0 + std::abs(lower[k]) +
                                               std::abs(upper[k]));
        if (new_hi < upper[k] - step) {
          if (new_hi < lower[k] - slack) return false;
          upper[k] = std::max(new_hi, lower[k]);
          moved = true;
        }
        if (new_lo > lower[k] + step) {
          if (new_lo > upper[k] + slack) return false;
          lower[k] = std::min(new_lo, upper[k]);
          moved = true;
        }
      }
      if (moved) {
        changed.push_back(k);
        break;
      }
    }
    if (!moved) return true;
  }
  return true;
}

bool BoundPropagator::Propagate(std::vector<double>& lower,
                                std::vector<double>& upper) const {
  const int m = model_.num_constraints();
  std::vector<char> queued(m, 1);
  std::vector<int> queue(m);
  for (int i = 0; i < m; ++i) queue[i] = i;
  size_t head = 0;
  long budget = static_cast<long>(kWorkFactor) * std::max(m, 1);
  std::vector<int> changed;
  while (head < queue.size() && budget-- > 0) {
    const int row = queue[head++];
    queued[row] = 0;
    changed.clear();
    if (!TightenRow(row, lower, upper, changed)) return false;
    for (int k : changed) {
      for (int r : rows_of_column_[k]) {
        if (!queued[r]) {
          queued[r] = 1;
          queue.push_back(r);
        }
      }
    }
    if (head > 4096 && head * 2 > queue.size()) {
      queue.erase(queue.begin(), queue.begin() + head);
      head = 0;
    }
  }
  return true;
}

}  // namespace pwtame::solver

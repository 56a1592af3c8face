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

#include "pwtame/solver/simplex.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"

namespace pwtame::solver {

namespace {

// Entries below this magnitude are flushed to zero during elimination.
constexpr double kDropTolerance = 1e-14;
// Steps that improve the phase objective by less than this count as stalls.
constexpr double kProgressTolerance = 1e-12;
// Basic values are recomputed from the nonbasic ones this often.
constexpr int64_t kRecomputeInterval = 100;
// Entries of this size signal an ill-conditioned basis.
constexpr double kBlowUp = 1e14;

}  // namespace

absl::StatusOr<DenseSimplex> DenseSimplex::Create(const LpProblem& problem,
                                                  size_t max_tableau_bytes) {
  if (absl::Status status = problem.Validate(); !status.ok()) return status;
  DenseSimplex s;
  s.n_ = problem.num_columns();
  s.m_ = problem.num_rows();
  s.N_ = s.n_ + s.m_;
  const double bytes = static_cast<double>(s.m_) * s.N_ * sizeof(double);
  if (bytes > static_cast<double>(max_tableau_bytes)) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "dense tableau of ", s.m_, " x ", s.N_, " needs ",
        static_cast<int64_t>(bytes / (1 << 20)), " MiB, over the limit of ",
        max_tableau_bytes >> 20, " MiB; export the model as MPS instead"));
  }
  s.cost_ = problem.cost;
  s.lower_ = problem.lower;
  s.upper_ = problem.upper;
  s.cost_.resize(s.N_, 0.0);
  for (const LpRow& row : problem.rows) {
    s.lower_.push_back(row.lower);
    s.upper_.push_back(row.upper);
  }
  s.rows_ = problem.rows;
  s.basis_.resize(s.m_);
  s.basic_row_.assign(s.N_, -1);
  s.status_.resize(s.N_);
  s.x_.assign(s.N_, 0.0);
  s.reduced_.assign(s.N_, 0.0);
  s.ResetTableau();
  for (int j = 0; j < s.n_; ++j) {
    s.status_[j] = s.NonbasicStatusFor(j, 0.0);
    switch (s.status_[j]) {
      case VarStatus::kAtUpper:
        s.x_[j] = s.upper_[j];
        break;
      case VarStatus::kFree:
        s.x_[j] = 0.0;
        break;
      default:
        s.x_[j] = s.lower_[j];
    }
  }
  s.RecomputeBasics();
  return s;
}

void DenseSimplex::ResetTableau() {
  tableau_.assign(static_cast<size_t>(m_) * N_, 0.0);
  for (int i = 0; i < m_; ++i) {
    for (const Term& t : rows_[i].terms) T(i, t.var) -= t.coeff;
    T(i, n_ + i) = 1.0;
  }
  std::fill(basic_row_.begin(), basic_row_.end(), -1);
  for (int i = 0; i < m_; ++i) {
    basis_[i] = n_ + i;
    basic_row_[n_ + i] = i;
    status_[n_ + i] = VarStatus::kBasic;
  }
}

DenseSimplex::VarStatus DenseSimplex::NonbasicStatusFor(
    int k, double preferred) const {
  const double lo = lower_[k];
  const double hi = upper_[k];
  if (lo == hi) return VarStatus::kFixed;
  const bool lo_finite = std::isfinite(lo);
  const bool hi_finite = std::isfinite(hi);
  if (lo_finite && hi_finite) {
    return std::abs(preferred - lo) <= std::abs(hi - preferred)
               ? VarStatus::kAtLower
               : VarStatus::kAtUpper;
  }
  if (lo_finite) return VarStatus::kAtLower;
  if (hi_finite) return VarStatus::kAtUpper;
  return VarStatus::kFree;
}

void DenseSimplex::SetColumnBounds(int j, double lower, double upper) {
  lower_[j] = lower;
  upper_[j] = upper;
  if (status_[j] == VarStatus::kBasic) return;
  const double old = x_[j];
  status_[j] = NonbasicStatusFor(j, old);
  double value = 0.0;
  switch (status_[j]) {
    case VarStatus::kAtUpper:
      value = upper;
      break;
    case VarStatus::kFree:
      value = 0.0;
      break;
    default:
      value = lower;
  }
  const double delta = value - old;
  if (delta == 0.0) return;
  x_[j] = value;
  for (int i = 0; i < m_; ++i) {
    const double t = T(i, j);
    if (t != 0.0) x_[basis_[i]] -= t * delta;
  }
}

void DenseSimplex::RecomputeBasics() {
  std::vector<int> active;
  for (int j = 0; j < N_; ++j) {
    if (status_[j] != VarStatus::kBasic && x_[j] != 0.0) active.push_back(j);
  }
  for (int i = 0; i < m_; ++i) {
    double s = 0.0;
    const double* row = &tableau_[static_cast<size_t>(i) * N_];
    for (int j : active) s -= row[j] * x_[j];
    x_[basis_[i]] = s;
  }
}

void DenseSimplex::Pivot(int r, int q) {
  double* pivot_row = &tableau_[static_cast<size_t>(r) * N_];
  const double inv = 1.0 / pivot_row[q];
  row_nonzeros_.clear();
  for (int j = 0; j < N_; ++j) {
    if (pivot_row[j] != 0.0) {
      pivot_row[j] *= inv;
      row_nonzeros_.push_back(j);
    }
  }
  pivot_row[q] = 1.0;
  for (int i = 0; i < m_; ++i) {
    if (i == r) continue;
    double* row = &tableau_[static_cast<size_t>(i) * N_];
    const double f = row[q];
    if (f == 0.0) continue;
    for (int j : row_nonzeros_) {
      const double v = row[j] - f * pivot_row[j];
      row[j] = std::abs(v) < kDropTolerance ? 0.0 : v;
    }
    row[q] = 0.0;
  }
  const int leaving = basis_[r];
  basic_row_[leaving] = -1;
  basis_[r] = q;
  basic_row_[q] = r;
}

void DenseSimplex::Refactor() {
  const std::vector<VarStatus> old_status = status_;
  const std::vector<double> old_x = x_;
  std::vector<char> target(N_, 0);
  for (int i = 0; i < m_; ++i) target[basis_[i]] = 1;
  ResetTableau();
  for (int j = 0; j < n_; ++j) {
    if (!target[j]) continue;
    int best = -1;
    double best_abs = kPivotTolerance;
    for (int i = 0; i < m_; ++i) {
      if (target[basis_[i]]) continue;
      const double a = std::abs(T(i, j));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (best < 0) {
      // Dependent column: leave it out and keep the slack.
      status_[j] = NonbasicStatusFor(j, old_x[j]);
      x_[j] = status_[j] == VarStatus::kAtUpper ? upper_[j]
              : status_[j] == VarStatus::kFree  ? 0.0
                                                : lower_[j];
      continue;
    }
    const int leaving = basis_[best];
    Pivot(best, j);
    status_[j] = VarStatus::kBasic;
    status_[leaving] = old_status[leaving];
    x_[leaving] = old_x[leaving];
  }
  RecomputeBasics();
}

double DenseSimplex::Violation(int k) const {
  return std::max({lower_[k] - x_[k], x_[k] - upper_[k], 0.0});
}

double DenseSimplex::MaxResidual() const {
  double worst = 0.0;
  for (int i = 0; i < m_; ++i) {
    double s = 0.0, scale = 1.0;
    for (const Term& t : rows_[i].terms) {
      const double v = t.coeff * x_[t.var];
      s += v;
      scale += std::abs(v);
    }
    const double r = std::abs(s - x_[n_ + i]) / scale;
    if (!(r <= worst)) worst = std::isnan(r) ? kInfinity : r;
  }
  return worst;
}

double DenseSimplex::MaxBoundViolation() const {
  double worst = 0.0;
  for (int k = 0; k < N_; ++k) {
    const double v = Violation(k) / (1.0 + std::abs(x_[k]));
    if (!(v <= worst)) worst = std::isnan(v) ? kInfinity : v;
  }
  return worst;
}

std::vector<double> DenseSimplex::Solution() const {
  return std::vector<double>(x_.begin(), x_.begin() + n_);
}

double DenseSimplex::Objective() const {
  double total = 0.0;
  for (int j = 0; j < n_; ++j) {
    if (cost_[j] != 0.0) total += cost_[j] * x_[j];
  }
  return total;
}

LpStatus DenseSimplex::Iterate(const LpOptions& options) {
  int stall = 0;
  bool bland = false;
  skip_.assign(N_, 0);
  rejected_.clear();
  int64_t since_recompute = 0;
  std::vector<double> basic_cost(m_);
  for (;;) {
    if (iterations_ >= options.max_iterations) return LpStatus::kIterationLimit;
    if (Clock::now() >= options.deadline) return LpStatus::kTimeLimit;
    if (++since_recompute >= kRecomputeInterval) {
      RecomputeBasics();
      since_recompute = 0;
    }

    // Phase and reduced costs.
    bool phase1 = false;
    for (int i = 0; i < m_; ++i) {
      const int k = basis_[i];
      if (x_[k] < lower_[k] - kPrimalTolerance) {
        basic_cost[i] = -1.0;
        phase1 = true;
      } else if (x_[k] > upper_[k] + kPrimalTolerance) {
        basic_cost[i] = 1.0;
        phase1 = true;
      } else {
        basic_cost[i] = 0.0;
      }
    }
    if (phase1) {
      std::fill(reduced_.begin(), reduced_.end(), 0.0);
    } else {
      reduced_ = cost_;
      for (int i = 0; i < m_; ++i) basic_cost[i] = cost_[basis_[i]];
    }
    for (int i = 0; i < m_; ++i) {
      const double cb = basic_cost[i];
      if (cb == 0.0) continue;
      const double* row = &tableau_[static_cast<size_t>(i) * N_];
      for (int j = 0; j < N_; ++j) {
        if (row[j] != 0.0) reduced_[j] -= cb * row[j];
      }
    }

    // Pricing.
    int q = -1;
    int dir = 0;
    double best_score = 0.0;
    for (int j = 0; j < N_; ++j) {
      const VarStatus st = status_[j];
      if (st == VarStatus::kBasic || st == VarStatus::kFixed || skip_[j]) {
        continue;
      }
      const double d = reduced_[j];
      int jdir = 0;
      if (st == VarStatus::kAtLower) {
        if (d < -kDualTolerance) jdir = 1;
      } else if (st == VarStatus::kAtUpper) {
        if (d > kDualTolerance) jdir = -1;
      } else if (std::abs(d) > kDualTolerance) {
        jdir = d < 0.0 ? 1 : -1;
      }
      if (jdir == 0) continue;
      if (bland) {
        q = j;
        dir = jdir;
        break;
      }
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        q = j;
        dir = jdir;
      }
    }
    if (q < 0) return phase1 ? LpStatus::kInfeasible : LpStatus::kOptimal;

    // Ratio test. Basic i moves at rate alpha_i = -T(i, q) * dir.
    const double range = upper_[q] - lower_[q];
    double theta_max = std::isfinite(range) ? range : kInfinity;
    auto limit = [&](int i, double alpha, double slack) -> double {
      const int k = basis_[i];
      const double v = x_[k];
      const bool below = v < lower_[k] - kPrimalTolerance;
      const bool above = v > upper_[k] + kPrimalTolerance;
      if (below) return alpha > 0.0 ? (lower_[k] - v) / alpha : kInfinity;
      if (above) return alpha < 0.0 ? (upper_[k] - v) / alpha : kInfinity;
      if (alpha > 0.0) {
        return std::isfinite(upper_[k]) ? (upper_[k] + slack - v) / alpha
                                        : kInfinity;
      }
      return std::isfinite(lower_[k]) ? (lower_[k] - slack - v) / alpha
                                      : kInfinity;
    };
    // Pass 1: the step allowed with bounds relaxed by the tolerance.
    double relaxed = theta_max;
    for (int i = 0; i < m_; ++i) {
      const double alpha = -T(i, q) * dir;
      if (std::abs(alpha) <= kPivotTolerance) continue;
      relaxed = std::min(relaxed, limit(i, alpha, kPrimalTolerance));
    }
    // Pass 2: among rows blocking within that step, the largest pivot (or,
    // under Bland's rule, the smallest exact ratio then smallest index).
    int r = -1;
    double r_theta = kInfinity;
    double r_alpha = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double alpha = -T(i, q) * dir;
      if (std::abs(alpha) <= kPivotTolerance) continue;
      const double t = limit(i, alpha, 0.0);
      if (!std::isfinite(t) || t > relaxed) continue;
      if (bland) {
        if (r < 0 || t < r_theta - kProgressTolerance ||
            (t <= r_theta + kProgressTolerance && basis_[i] < basis_[r])) {
          r = i;
          r_theta = t;
          r_alpha = alpha;
        }
      } else if (std::abs(alpha) > std::abs(r_alpha)) {
        r = i;
        r_theta = t;
        r_alpha = alpha;
      }
    }
    ++iterations_;

    const bool flip = std::isfinite(range) && (r < 0 || range <= r_theta);
    if (r < 0 && !flip) {
      if (!phase1) return LpStatus::kUnbounded;
      // Phase 1 cannot be unbounded: the candidate's profit came from pivots
      // below tolerance. Skip it until the next successful step.
      skip_[q] = 1;
      rejected_.push_back(q);
      continue;
    }
    for (int j : rejected_) skip_[j] = 0;
    rejected_.clear();
    const double theta = flip ? range : std::max(r_theta, 0.0);
    if (theta != 0.0) {
      x_[q] += dir * theta;
      for (int i = 0; i < m_; ++i) {
        const double t = T(i, q);
        if (t != 0.0) x_[basis_[i]] -= t * dir * theta;
      }
    }
    if (flip) {
      status_[q] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
      x_[q] = dir > 0 ? upper_[q] : lower_[q];
    } else {
      const int leaving = basis_[r];
      const double v = x_[leaving];
      const bool to_lower =
          std::abs(v - lower_[leaving]) <= std::abs(v - upper_[leaving]);
      Pivot(r, q);
      status_[q] = VarStatus::kBasic;
      if (lower_[leaving] == upper_[leaving]) {
        status_[leaving] = VarStatus::kFixed;
        x_[leaving] = lower_[leaving];
      } else if (to_lower) {
        status_[leaving] = VarStatus::kAtLower;
        x_[leaving] = lower_[leaving];
      } else {
        status_[leaving] = VarStatus::kAtUpper;
        x_[leaving] = upper_[leaving];
      }
      if (!std::isfinite(x_[leaving])) {
        // A free variable cannot leave at a bound; should not happen since
        // free basics never block.
        status_[leaving] = VarStatus::kFree;
        x_[leaving] = 0.0;
        RecomputeBasics();
      }
      if (std::abs(1.0 / r_alpha) > kBlowUp) return LpStatus::kNumericalFailure;
    }

    if (theta * std::abs(reduced_[q]) > kProgressTolerance) {
      stall = 0;
      bland = false;
    } else if (++stall > kStallLimit) {
      bland = true;
    }
  }
}

LpStatus DenseSimplex::Solve(const LpOptions& options) {
  // Basic values recomputed after the last pivot may drift just outside
  // their bounds; another pass repairs that. A row residual over tolerance
  // means the tableau itself drifted and calls for a refactorization.
  int refactors = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    RecomputeBasics();
    const LpStatus status = Iterate(options);
    if (status == LpStatus::kIterationLimit || status == LpStatus::kTimeLimit) {
      return status;
    }
    if (status != LpStatus::kNumericalFailure) {
      RecomputeBasics();
      if (MaxResidual() <= kResidualTolerance) {
        if (status != LpStatus::kOptimal ||
            MaxBoundViolation() <= kPrimalTolerance) {
          return status;
        }
        continue;
      }
    }
    if (refactors++ == 1) break;
    Refactor();
  }
  return LpStatus::kNumericalFailure;
}

}  // namespace pwtame::solver

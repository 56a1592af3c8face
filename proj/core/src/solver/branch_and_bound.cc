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

#include "pwtame/solver/branch_and_bound.h"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <queue>
#include <thread>
#include <utility>

#include "absl/strings/str_cat.h"
#include "pwtame/formulation/feasibility.h"
#include "pwtame/solver/propagation.h"
#include "pwtame/solver/simplex.h"

namespace pwtame::solver {

namespace {

using formulation::Assignment;
using formulation::MipModel;
using formulation::VarType;

constexpr double kIntegralityTolerance = 1e-6;
constexpr double kBoundNoise = 1e-9;

struct Node {
  double bound = -kInfinity;
  int depth = 0;
  int64_t seq = 0;
  // (binary variable, fixed value) along the path from the root.
  std::vector<std::pair<int, int>> fixings;
};

// priority_queue keeps the "largest" on top, so this orders worst first.
struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Search {
 public:
  Search(const MipModel& model, const SolverConfig& config,
         const DenseSimplex& root)
      : model_(model), config_(config), root_(root), propagator_(model) {
    for (int j = 0; j < model.num_variables(); ++j) {
      if (model.variable(j).type == VarType::kBinary) binaries_.push_back(j);
    }
    start_ = Clock::now();
    const double limit = std::min(config.time_limit, 1e9);
    deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(limit));
  }

  MipResult Run() {
    queue_.push(Node{-kInfinity, 0, next_seq_++, {}});
    const int threads = config_.deterministic ? 1 : std::max(1, config_.threads);
    active_bounds_.assign(threads, kInfinity);
    if (threads == 1) {
      Work(0);
    } else {
      std::vector<std::thread> workers;
      for (int w = 0; w < threads; ++w) workers.emplace_back([this, w] { Work(w); });
      for (std::thread& t : workers) t.join();
    }
    return Finish();
  }

 private:
  bool Prunable(double bound) const {
    return incumbent_.has_value() &&
           RelativeGap(incumbent_objective_, bound) <= config_.gap_tolerance;
  }

  // Caller holds mu_.
  void Prune(double bound) {
    if (bound < incumbent_objective_) {
      pruned_bound_ = std::min(pruned_bound_, bound);
    }
  }

  // Caller holds mu_.
  double GlobalBound() const {
    double bound = queue_.empty() ? kInfinity : queue_.top().bound;
    for (double b : active_bounds_) bound = std::min(bound, b);
    bound = std::min(bound, pruned_bound_);
    bound = std::min(bound, unresolved_bound_);
    return std::min(bound, incumbent_objective_);
  }

  // Caller holds mu_.
  void TraceBound() {
    const double bound = GlobalBound();
    if (bound == kInfinity) return;
    if (bound_trace_.empty() || bound > last_bound_ + 1e-12) {
      last_bound_ = bound;
      bound_trace_.push_back({Seconds(start_), nodes_, bound});
    }
  }

  void Work(int worker) {
    DenseSimplex simplex = root_;
    const int num_vars = model_.num_variables();
    std::vector<double> lo(num_vars), hi(num_vars);
    for (int j = 0; j < num_vars; ++j) {
      lo[j] = simplex.column_lower(j);
      hi[j] = simplex.column_upper(j);
    }
    auto set_bounds = [&](int j, double l, double h) {
      if (lo[j] == l && hi[j] == h) return;
      lo[j] = l;
      hi[j] = h;
      simplex.SetColumnBounds(j, l, h);
    };
    std::vector<double> node_lo(num_vars), node_hi(num_vars);

    std::unique_lock<std::mutex> lock(mu_);
    for (;;) {
      if (stop_) break;
      if (queue_.empty()) {
        if (active_ == 0) break;
        cv_.wait(lock);
        continue;
      }
      if (nodes_ >= config_.node_limit || Clock::now() >= deadline_) {
        limit_hit_ = true;
        stop_ = true;
        break;
      }
      Node node = queue_.top();
      queue_.pop();
      if (Prunable(node.bound)) {
        Prune(node.bound);
        continue;
      }
      ++nodes_;
      ++active_;
      active_bounds_[worker] = node.bound;
      TraceBound();
      lock.unlock();

      // Node box: model bounds plus the path's fixings, then propagated.
      for (int j = 0; j < num_vars; ++j) {
        node_lo[j] = model_.variable(j).lower;
        node_hi[j] = model_.variable(j).upper;
      }
      for (const auto& [var, value] : node.fixings) {
        node_lo[var] = node_hi[var] = value;
      }
      const bool consistent = propagator_.Propagate(node_lo, node_hi);
      if (consistent) {
        for (int j = 0; j < num_vars; ++j) set_bounds(j, node_lo[j], node_hi[j]);
      }
      LpOptions options;
      options.deadline = deadline_;
      const int64_t before = simplex.iterations();
      const LpStatus status =
          consistent ? simplex.Solve(options) : LpStatus::kInfeasible;

      std::optional<Assignment> candidate;
      int branch_var = -1;
      double value = 0.0;
      double objective = 0.0;
      if (status == LpStatus::kOptimal) {
        // Increases below the noise level keep the parent's bound exactly, so
        // the depth tie-break is not undone by round-off.
        objective = simplex.Objective();
        if (objective <= node.bound + kBoundNoise * std::max(1.0, std::abs(node.bound))) {
          objective = node.bound;
        }
        const std::vector<double> x = simplex.Solution();
        double best = kIntegralityTolerance;
        for (int j : binaries_) {
          const double f = std::min(x[j], 1.0 - x[j]);
          if (f > best) {
            best = f;
            branch_var = j;
          }
        }
        if (branch_var >= 0) {
          value = x[branch_var];
        } else {
          // Integral relaxation: pin the binaries exactly and re-solve so the
          // continuous part matches them.
          for (int j : binaries_) {
            const double r = std::round(x[j]);
            set_bounds(j, r, r);
          }
          const LpStatus polish = simplex.Solve(options);
          if (polish == LpStatus::kOptimal) {
            Assignment a{simplex.Solution()};
            // Values sit within the LP tolerance of their box; snap them in.
            for (int j = 0; j < num_vars; ++j) {
              a.values[j] = std::clamp(a.values[j], model_.variable(j).lower,
                                       model_.variable(j).upper);
            }
            for (int j : binaries_) a.values[j] = std::round(a.values[j]);
            candidate = std::move(a);
          }
        }
      }

      lock.lock();
      lp_iterations_ += simplex.iterations() - before;
      --active_;
      active_bounds_[worker] = kInfinity;
      switch (status) {
        case LpStatus::kOptimal:
          if (candidate) {
            Offer(*std::move(candidate));
          } else if (branch_var < 0) {
            // Polishing failed; the node stays unresolved.
            numerical_failure_ = true;
            unresolved_bound_ = std::min(unresolved_bound_, objective);
          } else if (Prunable(objective)) {
            Prune(objective);
          } else {
            const int up_first = value >= 0.5;
            for (int side = 0; side < 2; ++side) {
              Node child{objective, node.depth + 1, next_seq_++, node.fixings};
              child.fixings.push_back(
                  {branch_var, side == 0 ? up_first : 1 - up_first});
              queue_.push(std::move(child));
            }
          }
          break;
        case LpStatus::kInfeasible:
          break;
        case LpStatus::kUnbounded:
          unbounded_ = true;
          stop_ = true;
          break;
        case LpStatus::kTimeLimit:
        case LpStatus::kIterationLimit:
          queue_.push(std::move(node));
          limit_hit_ = true;
          stop_ = true;
          break;
        case LpStatus::kNumericalFailure:
          numerical_failure_ = true;
          unresolved_bound_ = std::min(unresolved_bound_, node.bound);
          break;
      }
      TraceBound();
      cv_.notify_all();
    }
    cv_.notify_all();
  }

  // Caller holds mu_.
  void Offer(Assignment candidate) {
    absl::StatusOr<formulation::FeasibilityReport> report =
        formulation::CheckFeasible(model_, candidate);
    if (!report.ok() || !report->feasible()) {
      ++rejected_;
      last_rejection_ =
          report.ok() ? report->Summary(3) : std::string(report.status().message());
      return;
    }
    if (report->objective < incumbent_objective_) {
      incumbent_objective_ = report->objective;
      incumbent_ = std::move(candidate);
      incumbent_trace_.push_back(
          {Seconds(start_), nodes_, incumbent_objective_});
    }
  }

  MipResult Finish() {
    MipResult result;
    result.nodes = nodes_;
    result.lp_iterations = lp_iterations_;
    result.wall_time = Seconds(start_);
    result.incumbent = incumbent_;
    result.objective = incumbent_objective_;
    // Bounds only move up; the trace keeps the running maximum.
    double bound = GlobalBound();
    if (!bound_trace_.empty()) bound = std::max(bound, last_bound_);
    result.bound_trace = std::move(bound_trace_);
    result.incumbent_trace = std::move(incumbent_trace_);
    if (incumbent_) bound = std::min(bound, incumbent_objective_);
    result.best_bound = bound;
    result.gap = incumbent_ ? RelativeGap(incumbent_objective_, bound) : kInfinity;
    if (unbounded_) {
      result.status = MipStatus::kUnbounded;
      result.message = "LP relaxation is unbounded";
    } else if (numerical_failure_) {
      result.status = MipStatus::kNumericalFailure;
      result.message = "LP engine hit a numerical failure on some node";
    } else if (limit_hit_ && !(incumbent_ && result.gap <= config_.gap_tolerance)) {
      result.status = incumbent_ ? MipStatus::kFeasibleTimeLimit
                                 : MipStatus::kLimitNoIncumbent;
      result.message = nodes_ >= config_.node_limit ? "node limit reached"
                                                    : "time limit reached";
    } else if (incumbent_) {
      result.status = MipStatus::kOptimal;
    } else {
      result.status = MipStatus::kInfeasible;
      result.best_bound = kInfinity;
    }
    if (rejected_ > 0) {
      absl::StrAppend(&result.message, result.message.empty() ? "" : "; ",
                      rejected_, " integral LP point(s) failed the feasibility "
                      "check, last: ", last_rejection_);
    }
    return result;
  }

  const MipModel& model_;
  const SolverConfig& config_;
  const DenseSimplex& root_;
  const BoundPropagator propagator_;
  std::vector<int> binaries_;
  Clock::time_point start_;
  Clock::time_point deadline_;

  std::mutex mu_;
  std::condition_variable cv_;
  std::priority_queue<Node, std::vector<Node>, WorseNode> queue_;
  std::vector<double> active_bounds_;
  int active_ = 0;
  int64_t next_seq_ = 0;
  int64_t nodes_ = 0;
  int64_t lp_iterations_ = 0;
  bool stop_ = false;
  bool limit_hit_ = false;
  bool unbounded_ = false;
  bool numerical_failure_ = false;
  double pruned_bound_ = kInfinity;
  double unresolved_bound_ = kInfinity;
  double last_bound_ = -kInfinity;
  std::optional<Assignment> incumbent_;
  double incumbent_objective_ = kInfinity;
  int64_t rejected_ = 0;
  std::string last_rejection_;
  std::vector<TracePoint> bound_trace_;
  std::vector<TracePoint> incumbent_trace_;
};

}  // namespace

absl::Status SolverConfig::Validate() const {
  if (!(time_limit > 0.0)) {
    return absl::InvalidArgumentError("time limit must be positive");
  }
  if (!(gap_tolerance >= 0.0)) {
    return absl::InvalidArgumentError("gap tolerance must be non-negative");
  }
  if (node_limit < 1) return absl::InvalidArgumentError("node limit must be >= 1");
  if (threads < 1) return absl::InvalidArgumentError("threads must be >= 1");
  return absl::OkStatus();
}

std::string MipStatusName(MipStatus status) {
  switch (status) {
    case MipStatus::kOptimal:
      return "optimal";
    case MipStatus::kFeasibleTimeLimit:
      return "feasible_time_limit";
    case MipStatus::kInfeasible:
      return "infeasible";
    case MipStatus::kUnbounded:
      return "unbounded";
    case MipStatus::kLimitNoIncumbent:
      return "limit_no_incumbent";
    case MipStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

double RelativeGap(double incumbent, double bound) {
  if (!std::isfinite(incumbent)) return kInfinity;
  if (bound == -kInfinity) return kInfinity;
  return (incumbent - bound) / std::max(std::abs(incumbent), 1.0);
}

absl::StatusOr<MipResult> SolveMip(const MipModel& model,
                                   const SolverConfig& config) {
  if (absl::Status status = config.Validate(); !status.ok()) return status;
  if (absl::Status status = model.Validate(); !status.ok()) return status;
  absl::StatusOr<DenseSimplex> root =
      DenseSimplex::Create(RelaxationOf(model), config.max_tableau_bytes);
  if (!root.ok()) return root.status();
  Search search(model, config, *root);
  return search.Run();
}

absl::StatusOr<LpResult> SolveRelaxation(const MipModel& model,
                                         const LpOptions& options) {
  return SolveLp(RelaxationOf(model), options);
}

}  // namespace pwtame::solver

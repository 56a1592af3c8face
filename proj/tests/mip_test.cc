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

#include <cmath>
#include <limits>
#include <vector>

#include "absl/strings/str_cat.h"
#include "gtest/gtest.h"
#include "pwtame/formulation/builder.h"
#include "pwtame/formulation/feasibility.h"
#include "pwtame/formulation/mip_model.h"
#include "pwtame/functions/rng.h"
#include "pwtame/solver/branch_and_bound.h"
#include "pwtame/solver/lp.h"
#include "pwtame/solver/propagation.h"
#include "test_util.h"

namespace pwtame::solver {
namespace {

using formulation::MipModel;
using formulation::Sense;
using formulation::VarType;

SolverConfig Quick() {
  SolverConfig config;
  config.time_limit = 60.0;
  return config;
}

// Random 0/1 knapsack-with-side-constraint in minimization form.
MipModel RandomBinaryProgram(functions::Rng& rng, int n) {
  MipModel m;
  std::vector<formulation::Term> weight, pair;
  for (int j = 0; j < n; ++j) {
    const int x = m.AddBinary(absl::StrCat("x_", j + 1));
    m.SetObjective(x, -std::round(1 + 9 * rng.Uniform()));
    weight.push_back({x, std::round(1 + 9 * rng.Uniform())});
    if (j % 3 == 0) pair.push_back({x, 1.0});
  }
  m.AddConstraint("cap_1", weight, Sense::kLessEqual, 4.0 * n / 2);
  m.AddConstraint("pick_1", pair, Sense::kLessEqual, 1.0);
  return m;
}

double BruteForceBinary(const MipModel& m) {
  const int n = m.num_variables();
  double best = std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    formulation::Assignment x{std::vector<double>(n)};
    for (int j = 0; j < n; ++j) x.values[j] = (mask >> j) & 1u;
    if (formulation::CheckFeasible(m, x)->feasible()) {
      best = std::min(best, formulation::ObjectiveValue(m, x));
    }
  }
  return best;
}

TEST(MipTest, BinaryProgramsMatchEnumeration) {
  functions::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    MipModel m = RandomBinaryProgram(rng, 6 + trial % 7);
    absl::StatusOr<MipResult> r = SolveMip(m, Quick());
    ASSERT_TRUE(r.ok()) << r.status();
    ASSERT_EQ(r->status, MipStatus::kOptimal);
    EXPECT_NEAR(r->objective, BruteForceBinary(m), 1e-9) << "trial " << trial;
    EXPECT_LE(r->gap, 1e-6);
    EXPECT_LE(r->best_bound, r->objective + 1e-9);
    ASSERT_TRUE(r->incumbent.has_value());
    EXPECT_TRUE(formulation::CheckFeasible(m, *r->incumbent)->feasible());
  }
}

TEST(MipTest, MixedProgramMatchesBinaryEnumerationWithLp) {
  // Uncapacitated facility location: open y_f (cost f), serve x_cf <= y_f.
  functions::Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    MipModel m;
    const int F = 4, C = 5;
    std::vector<int> y;
    for (int f = 0; f < F; ++f) {
      y.push_back(m.AddBinary(absl::StrCat("y_", f + 1)));
      m.SetObjective(y.back(), 2 + 4 * rng.Uniform());
    }
    for (int c = 0; c < C; ++c) {
      std::vector<formulation::Term> serve;
      for (int f = 0; f < F; ++f) {
        const int x = m.AddVariable(absl::StrCat("x_", c + 1, "_", f + 1), 0, 1,
                                    VarType::kContinuous);
        m.SetObjective(x, 5 * rng.Uniform());
        serve.push_back({x, 1.0});
        m.AddConstraint(absl::StrCat("open_", c + 1, "_", f + 1),
                        {{x, 1.0}, {y[f], -1.0}}, Sense::kLessEqual, 0.0);
      }
      m.AddConstraint(absl::StrCat("serve_", c + 1), serve, Sense::kEqual, 1.0);
    }
    double best = std::numeric_limits<double>::infinity();
    for (uint32_t mask = 1; mask < (1u << F); ++mask) {
      // With the facilities fixed, each client picks its cheapest open one.
      double cost = 0.0;
      for (int f = 0; f < F; ++f) {
        if ((mask >> f) & 1u) cost += m.objective()[y[f]];
      }
      for (int c = 0; c < C; ++c) {
        double cheapest = std::numeric_limits<double>::infinity();
        for (int f = 0; f < F; ++f) {
          if ((mask >> f) & 1u) {
            cheapest = std::min(cheapest, m.objective()[F + c * F + f]);
          }
        }
        cost += cheapest;
      }
      best = std::min(best, cost);
    }
    MipResult r = *SolveMip(m, Quick());
    ASSERT_EQ(r.status, MipStatus::kOptimal);
    EXPECT_NEAR(r.objective, best, 1e-7);
  }
}

TEST(MipTest, InfeasibleProgram) {
  MipModel m;
  const int x = m.AddBinary("x_1");
  const int y = m.AddBinary("y_1");
  m.AddConstraint("a_1", {{x, 1}, {y, 1}}, Sense::kEqual, 1);
  m.AddConstraint("b_1", {{x, 1}, {y, -1}}, Sense::kEqual, 0);
  MipResult r = *SolveMip(m, Quick());
  EXPECT_EQ(r.status, MipStatus::kInfeasible);
  EXPECT_FALSE(r.incumbent.has_value());
  EXPECT_EQ(MipStatusName(r.status), "infeasible");
}

TEST(MipTest, NodeLimitReportsLimitStatus) {
  functions::Rng rng(8);
  MipModel m = RandomBinaryProgram(rng, 14);
  SolverConfig config = Quick();
  config.node_limit = 1;
  MipResult r = *SolveMip(m, config);
  EXPECT_TRUE(r.status == MipStatus::kFeasibleTimeLimit ||
              r.status == MipStatus::kLimitNoIncumbent ||
              r.status == MipStatus::kOptimal)
      << MipStatusName(r.status);
  if (r.status != MipStatus::kOptimal) {
    EXPECT_EQ(r.message, "node limit reached");
  }
  EXPECT_LE(r.nodes, 1);
}

TEST(MipTest, DeterministicRunsAgree) {
  functions::SampleSet s = testing::QuadrantL1Samples();
  MipModel m = *formulation::BuildAxisAligned(s, testing::Params(1, 1));
  MipResult a = *SolveMip(m, Quick());
  MipResult b = *SolveMip(m, Quick());
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(a.lp_iterations, b.lp_iterations);
  EXPECT_EQ(a.incumbent->values, b.incumbent->values);
}

TEST(MipTest, ExactL1QuadrantsHaveZeroError) {
  functions::SampleSet s = testing::QuadrantL1Samples();
  MipModel m = *formulation::BuildAxisAligned(s, testing::Params(2, 1));
  MipResult r = *SolveMip(m, Quick());
  ASSERT_EQ(r.status, MipStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.0, 1e-7);
  EXPECT_TRUE(formulation::CheckFeasible(m, *r.incumbent)->feasible());
  // Traces are monotone.
  for (size_t k = 1; k < r.bound_trace.size(); ++k) {
    EXPECT_GE(r.bound_trace[k].value, r.bound_trace[k - 1].value);
  }
  for (size_t k = 1; k < r.incumbent_trace.size(); ++k) {
    EXPECT_LE(r.incumbent_trace[k].value, r.incumbent_trace[k - 1].value);
  }
}

TEST(MipTest, ParallelSearchFindsTheSameOptimum) {
  functions::Rng rng(12);
  MipModel m = RandomBinaryProgram(rng, 12);
  SolverConfig config = Quick();
  config.deterministic = false;
  config.threads = 3;
  MipResult r = *SolveMip(m, config);
  ASSERT_EQ(r.status, MipStatus::kOptimal);
  EXPECT_NEAR(r.objective, BruteForceBinary(m), 1e-9);
}

TEST(MipTest, RejectsBadConfig) {
  MipModel m;
  m.AddBinary("x_1");
  SolverConfig config;
  config.time_limit = 0.0;
  EXPECT_FALSE(SolveMip(m, config).ok());
  config = SolverConfig{};
  config.threads = 0;
  EXPECT_FALSE(SolveMip(m, config).ok());
  config = SolverConfig{};
  config.gap_tolerance = -1.0;
  EXPECT_FALSE(SolveMip(m, config).ok());
}

TEST(MipTest, RelativeGap) {
  EXPECT_EQ(RelativeGap(10.0, 9.0), 0.1);
  EXPECT_EQ(RelativeGap(0.5, 0.25), 0.25);
  EXPECT_EQ(RelativeGap(kInfinity, 0.0), kInfinity);
  EXPECT_EQ(RelativeGap(1.0, -kInfinity), kInfinity);
}

TEST(PropagationTest, FixingABinaryTightensItsPartner) {
  MipModel m;
  const int x = m.AddBinary("x_1");
  const int y = m.AddBinary("y_1");
  const int w = m.AddVariable("w_1", 0, 10, VarType::kContinuous);
  m.AddConstraint("r_1", {{x, 1}, {y, 1}}, Sense::kLessEqual, 1);
  m.AddConstraint("r_2", {{w, 1}, {y, -4}}, Sense::kLessEqual, 0);
  BoundPropagator propagator(m);
  std::vector<double> lower = {1, 0, 0}, upper = {1, 1, 10};
  ASSERT_TRUE(propagator.Propagate(lower, upper));
  EXPECT_EQ(upper[y], 0.0);
  EXPECT_NEAR(upper[w], 0.0, 1e-8);  // continuous bounds keep a safety slack
  lower = {1, 1, 0};
  upper = {1, 1, 10};
  EXPECT_FALSE(propagator.Propagate(lower, upper));
}

TEST(RelaxationTest, RootBoundIsBelowTheOptimum) {
  functions::Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    MipModel m = RandomBinaryProgram(rng, 8);
    LpResult lp = *SolveRelaxation(m);
    ASSERT_EQ(lp.status, LpStatus::kOptimal);
    EXPECT_LE(lp.objective, BruteForceBinary(m) + 1e-9);
  }
}

}  // namespace
}  // namespace pwtame::solver

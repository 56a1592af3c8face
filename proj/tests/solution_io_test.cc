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

#include <string>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "pwtame/formulation/builder.h"
#include "pwtame/formulation/feasibility.h"
#include "pwtame/formulation/mps.h"
#include "pwtame/solver/branch_and_bound.h"
#include "pwtame/solver/solution_io.h"
#include "test_util.h"

namespace pwtame::solver {
namespace {

using formulation::Assignment;
using formulation::MipModel;

struct Solved {
  MipModel model;
  Assignment solution;
};

Solved SolveQuadrants() {
  MipModel m = *formulation::BuildAxisAligned(testing::QuadrantL1Samples(),
                                              testing::Params(2, 1));
  MipResult r = *SolveMip(m, SolverConfig{});
  return {std::move(m), *r.incumbent};
}

TEST(SolutionIoTest, WriteThenImportRoundTrips) {
  Solved s = SolveQuadrants();
  const std::string text = WriteSolution(s.model, s.solution);
  EXPECT_EQ(text.rfind("# Objective value = ", 0), 0u);
  absl::StatusOr<Assignment> back = ImportSolution(s.model, text);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->values, s.solution.values);
}

TEST(SolutionIoTest, MangledNamesResolveThroughTheNameTable) {
  Solved s = SolveQuadrants();
  const formulation::MpsFiles files = formulation::ExportMps(s.model);
  std::string text = "# written by an external solver\n";
  for (int j = 0; j < s.model.num_variables(); ++j) {
    absl::StrAppendFormat(&text, "C%07d = %.17g\n", j + 1,
                          s.solution.values[j]);
  }
  EXPECT_EQ(ImportSolution(s.model, text).status().code(),
            absl::StatusCode::kNotFound);
  SolutionImportOptions options;
  options.name_table = files.name_table;
  absl::StatusOr<Assignment> back = ImportSolution(s.model, text, options);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->values, s.solution.values);
}

TEST(SolutionIoTest, BinariesAloneAreCompletedByAnLp) {
  Solved s = SolveQuadrants();
  std::string text;
  for (int j = 0; j < s.model.num_variables(); ++j) {
    if (s.model.variable(j).type == formulation::VarType::kBinary) {
      // Values within the integrality tolerance are rounded.
      absl::StrAppend(&text, s.model.variable(j).name, ",",
                      s.solution.values[j] > 0.5 ? "0.9999999" : "1e-8", "\n");
    }
  }
  absl::StatusOr<Assignment> back = ImportSolution(s.model, text);
  ASSERT_TRUE(back.ok()) << back.status();
  formulation::FeasibilityReport r = *formulation::CheckFeasible(s.model, *back);
  EXPECT_TRUE(r.feasible());
  EXPECT_NEAR(r.objective, 0.0, 1e-7);
}

TEST(SolutionIoTest, RejectsBadFiles) {
  Solved s = SolveQuadrants();
  const std::string full = WriteSolution(s.model, s.solution);
  EXPECT_FALSE(ImportSolution(s.model, "z_1_4 1 2\n").ok());
  EXPECT_FALSE(ImportSolution(s.model, "z_1_4 one\n").ok());
  EXPECT_EQ(ImportSolution(s.model, "nope_1 1\n").status().code(),
            absl::StatusCode::kNotFound);
  // A missing binary.
  std::string partial;
  for (absl::string_view line : absl::StrSplit(full, '\n')) {
    if (line.rfind("l_4 ", 0) == 0) continue;
    absl::StrAppend(&partial, line, "\n");
  }
  EXPECT_FALSE(ImportSolution(s.model, partial).ok());
  // A fractional binary.
  std::string fractional = absl::StrCat(full, "l_4 0.5\n");
  absl::Status status = ImportSolution(s.model, fractional).status();
  EXPECT_NE(status.message().find("integrality"), std::string::npos);
  // Every point in leaf 4 but with the recorded residuals: infeasible.
  std::string moved = full;
  for (int i = 1; i <= 4; ++i) {
    for (int t = 4; t <= 7; ++t) {
      absl::StrAppend(&moved, "z_", i, "_", t, " ", t == 4 ? 1 : 0, "\n");
    }
  }
  EXPECT_EQ(ImportSolution(s.model, moved).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

}  // namespace
}  // namespace pwtame::solver

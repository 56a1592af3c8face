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

#ifndef PWTAME_SOLVER_SOLUTION_IO_H_
#define PWTAME_SOLVER_SOLUTION_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/formulation/mip_model.h"
#include "pwtame/solver/lp.h"

namespace pwtame::solver {

struct SolutionImportOptions {
  // CSV from ExportMps; when set, names in the file may be MPS names.
  std::string name_table;
  double integrality_tolerance = 1e-6;
  LpOptions lp;
};

// Reads a solution in the common "name value" text layout (Gurobi .sol,
// CBC/HiGHS style dumps): one pair per line, '#' starts a comment, and '=' or
// ',' may separate the fields. Every binary must be listed and integral
// within the tolerance; continuous variables that are missing are completed
// by the LP with all listed values fixed. The result must pass CheckFeasible.
absl::StatusOr<formulation::Assignment> ImportSolution(
    const formulation::MipModel& model, absl::string_view text,
    const SolutionImportOptions& options = {});

// Writes every variable as "name value" under an objective comment line.
std::string WriteSolution(const formulation::MipModel& model,
                          const formulation::Assignment& assignment);

}  // namespace pwtame::solver

#endif  // PWTAME_SOLVER_SOLUTION_IO_H_

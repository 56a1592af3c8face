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

#include "pwtame/solver/solution_io.h"

#include <cmath>
#include <string>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "pwtame/formulation/feasibility.h"
#include "pwtame/formulation/mps.h"

namespace pwtame::solver {

using formulation::Assignment;
using formulation::MipModel;
using formulation::VarType;

absl::StatusOr<Assignment> ImportSolution(
    const MipModel& model, absl::string_view text,
    const SolutionImportOptions& options) {
  absl::flat_hash_map<std::string, std::string> table;
  if (!options.name_table.empty()) {
    absl::StatusOr<absl::flat_hash_map<std::string, std::string>> parsed =
        formulation::ParseNameTable(options.name_table);
    if (!parsed.ok()) return parsed.status();
    table = *std::move(parsed);
  }

  Assignment given = Assignment::Empty(model);
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    if (const size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t=,"), absl::SkipEmpty());
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          "solution line ", line_number, ": expected 'name value', got '",
          line, "'"));
    }
    std::string name(fields[0]);
    if (auto it = table.find(name); it != table.end()) name = it->second;
    const int var = model.FindVariable(name);
    if (var < 0) {
      return absl::NotFoundError(absl::StrCat(
          "solution line ", line_number, ": unknown variable '", fields[0],
          "'",
          table.empty() ? "; if the file uses mangled MPS names (C0000001...),"
                          " pass the name table written next to the MPS file"
                        : " (not in the model or the name table)"));
    }
    double value = 0.0;
    if (!absl::SimpleAtod(fields[1], &value) || !std::isfinite(value)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "solution line ", line_number, ": bad value '", fields[1], "'"));
    }
    given.values[var] = value;
  }

  bool complete = true;
  for (int j = 0; j < model.num_variables(); ++j) {
    const formulation::Variable& v = model.variable(j);
    if (v.type != VarType::kBinary) {
      complete = complete && given.has(j);
      continue;
    }
    if (!given.has(j)) {
      return absl::InvalidArgumentError(
          absl::StrCat("solution does not list binary variable ", v.name));
    }
    const double r = std::round(given.values[j]);
    if (std::abs(given.values[j] - r) > options.integrality_tolerance ||
        r < v.lower || r > v.upper) {
      return absl::InvalidArgumentError(
          absl::StrFormat("integrality violation: %s = %g", v.name,
                          given.values[j]));
    }
    given.values[j] = r;
  }

  Assignment out = given;
  if (!complete) {
    LpProblem lp = RelaxationOf(model);
    for (int j = 0; j < model.num_variables(); ++j) {
      if (given.has(j)) lp.lower[j] = lp.upper[j] = given.values[j];
    }
    absl::StatusOr<LpResult> result = SolveLp(lp, options.lp);
    if (!result.ok()) return result.status();
    if (result->status != LpStatus::kOptimal) {
      return absl::FailedPreconditionError(
          absl::StrCat("cannot complete the continuous variables: LP with the "
                       "listed values fixed is ",
                       LpStatusName(result->status)));
    }
    out.values = result->x;
  }
  absl::StatusOr<formulation::FeasibilityReport> report =
      formulation::CheckFeasible(model, out);
  if (!report.ok()) return report.status();
  if (!report->feasible()) {
    return absl::FailedPreconditionError(
        absl::StrCat("solution is infeasible: ", report->Summary()));
  }
  return out;
}

std::string WriteSolution(const MipModel& model, const Assignment& assignment) {
  std::string out = absl::StrFormat("# Objective value = %.17g\n",
                                    formulation::ObjectiveValue(model, assignment));
  for (int j = 0; j < model.num_variables(); ++j) {
    absl::StrAppendFormat(&out, "%s %.17g\n", model.variable(j).name,
                          assignment.values[j]);
  }
  return out;
}

}  // namespace pwtame::solver

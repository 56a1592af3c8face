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

#include "pwtame/formulation/feasibility.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pwtame::formulation {

std::string FeasibilityReport::Summary(int max_items) const {
  if (violations.empty()) {
    return absl::StrFormat("feasible, objective %.12g", objective);
  }
  std::string out = absl::StrFormat("%d violation(s), max %.3g:",
                                    violations.size(), max_violation);
  for (int k = 0; k < static_cast<int>(violations.size()) && k < max_items;
       ++k) {
    absl::StrAppendFormat(&out, " %s (%.3g)", violations[k].what,
                          violations[k].magnitude);
  }
  if (static_cast<int>(violations.size()) > max_items) out += " ...";
  return out;
}

absl::StatusOr<FeasibilityReport> CheckFeasible(const MipModel& model,
                                                const Assignment& assignment,
                                                double tolerance) {
  if (static_cast<int>(assignment.values.size()) != model.num_variables()) {
    return absl::InvalidArgumentError(
        absl::StrCat("assignment has ", assignment.values.size(),
                     " values, model has ", model.num_variables(),
                     " variables"));
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    if (!assignment.has(j)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "assignment does not cover variable ", model.variable(j).name));
    }
  }
  FeasibilityReport report;
  auto record = [&](std::string what, double magnitude) {
    if (magnitude > tolerance) {
      report.violations.push_back({std::move(what), magnitude});
      report.max_violation = std::max(report.max_violation, magnitude);
    }
  };
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    const double x = assignment.values[j];
    record(absl::StrCat("bound:", v.name),
           std::max(v.lower - x, x - v.upper));
    if (v.type == VarType::kBinary) {
      record(absl::StrCat("integrality:", v.name),
             std::min(std::abs(x), std::abs(x - 1.0)));
    }
  }
  for (const Constraint& c : model.constraints()) {
    double lhs = 0.0;
    for (const Term& t : c.terms) lhs += t.coeff * assignment.values[t.var];
    double violation = 0.0;
    switch (c.sense) {
      case Sense::kLessEqual:
        violation = lhs - c.rhs;
        break;
      case Sense::kGreaterEqual:
        violation = c.rhs - lhs;
        break;
      case Sense::kEqual:
        violation = std::abs(lhs - c.rhs);
        break;
    }
    record(c.name, violation);
  }
  report.objective = ObjectiveValue(model, assignment);
  return report;
}

}  // namespace pwtame::formulation

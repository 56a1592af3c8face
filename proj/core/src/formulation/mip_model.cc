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

#include "pwtame/formulation/mip_model.h"

#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace pwtame::formulation {

std::string SymbolInstance::Name() const {
  std::string name = symbol;
  for (int i : indices) absl::StrAppend(&name, "_", i);
  return name;
}

std::string SymbolInstance::Render() const {
  std::string stem = symbol;
  if (symbol == "ap") stem = "a^+";
  if (symbol == "am") stem = "a^-";
  if (indices.empty()) return stem;
  return absl::StrCat(stem, "_{", absl::StrJoin(indices, ","), "}");
}

absl::StatusOr<SymbolInstance> SymbolInstance::FromName(absl::string_view name) {
  std::vector<absl::string_view> parts = absl::StrSplit(name, '_');
  if (parts.empty() || parts[0].empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", name, "' is not a symbol instance name"));
  }
  SymbolInstance out;
  out.symbol = std::string(parts[0]);
  for (size_t k = 1; k < parts.size(); ++k) {
    int index = 0;
    if (!absl::SimpleAtoi(parts[k], &index)) {
      return absl::InvalidArgumentError(
          absl::StrCat("'", name, "' has a non-integer index"));
    }
    out.indices.push_back(index);
  }
  return out;
}

int MipModel::AddVariable(std::string name, double lower, double upper,
                          VarType type) {
  const int index = num_variables();
  variable_index_.emplace(name, index);
  variables_.push_back(Variable{std::move(name), lower, upper, type});
  objective_.push_back(0.0);
  return index;
}

int MipModel::AddConstraint(std::string name, std::vector<Term> terms,
                            Sense sense, double rhs) {
  const int index = num_constraints();
  constraint_index_.emplace(name, index);
  constraints_.push_back(
      Constraint{std::move(name), std::move(terms), sense, rhs});
  return index;
}

int MipModel::num_binaries() const {
  int count = 0;
  for (const Variable& v : variables_) count += v.type == VarType::kBinary;
  return count;
}

int MipModel::FindVariable(absl::string_view name) const {
  auto it = variable_index_.find(name);
  return it == variable_index_.end() ? -1 : it->second;
}

int MipModel::FindConstraint(absl::string_view name) const {
  auto it = constraint_index_.find(name);
  return it == constraint_index_.end() ? -1 : it->second;
}

absl::StatusOr<SymbolInstance> MipModel::SymbolOf(int var) const {
  return SymbolInstance::FromName(variables_[var].name);
}

absl::Status MipModel::Validate() const {
  if (variable_index_.size() != variables_.size()) {
    return absl::InvalidArgumentError("duplicate variable names");
  }
  if (constraint_index_.size() != constraints_.size()) {
    return absl::InvalidArgumentError("duplicate constraint names");
  }
  for (const Variable& v : variables_) {
    if (!(v.lower <= v.upper)) {
      return absl::InvalidArgumentError(
          absl::StrCat("variable ", v.name, " has lower > upper"));
    }
    if (v.type == VarType::kBinary && (v.lower < 0.0 || v.upper > 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("binary variable ", v.name, " has bounds outside [0,1]"));
    }
    if (absl::StatusOr<SymbolInstance> s = SymbolInstance::FromName(v.name);
        !s.ok()) {
      return s.status();
    }
  }
  for (const Constraint& c : constraints_) {
    for (const Term& t : c.terms) {
      if (t.var < 0 || t.var >= num_variables()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "constraint ", c.name, " references undeclared variable ", t.var));
      }
    }
  }
  return absl::OkStatus();
}

double ObjectiveValue(const MipModel& model, const Assignment& assignment) {
  double total = 0.0;
  for (int j = 0; j < model.num_variables(); ++j) {
    const double c = model.objective()[j];
    if (c != 0.0) total += c * assignment.values[j];
  }
  return total;
}

}  // namespace pwtame::formulation

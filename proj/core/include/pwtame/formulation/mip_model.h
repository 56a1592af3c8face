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

#ifndef PWTAME_FORMULATION_MIP_MODEL_H_
#define PWTAME_FORMULATION_MIP_MODEL_H_

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace pwtame::formulation {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VarType { kContinuous, kBinary };
enum class Sense { kLessEqual, kEqual, kGreaterEqual };

// One indexed instance of a formulation symbol, e.g. z_{3,5} or a^+_{1,2}.
// `symbol` is the ASCII stem used in variable names ("z", "ap", "phi", ...).
struct SymbolInstance {
  std::string symbol;
  std::vector<int> indices;

  // Variable name: stem and indices joined by '_', e.g. "z_3_5".
  std::string Name() const;
  // Math rendering, e.g. "z_{3,5}", "a^+_{1,2}", "delta_{7}".
  std::string Render() const;
  // Inverse of Name(); fails on names that are not stem_i_j...
  static absl::StatusOr<SymbolInstance> FromName(absl::string_view name);
};

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  VarType type = VarType::kContinuous;
};

struct Term {
  int var = 0;
  double coeff = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// Mixed-binary linear program: minimize objective^T x subject to the
// constraints and variable bounds.
class MipModel {
 public:
  int AddVariable(std::string name, double lower, double upper, VarType type);
  int AddBinary(std::string name) {
    return AddVariable(std::move(name), 0.0, 1.0, VarType::kBinary);
  }
  int AddConstraint(std::string name, std::vector<Term> terms, Sense sense,
                    double rhs);
  void SetObjective(int var, double coeff) { objective_[var] = coeff; }

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  int num_binaries() const;
  const Variable& variable(int j) const { return variables_[j]; }
  Variable& mutable_variable(int j) { return variables_[j]; }
  const Constraint& constraint(int i) const { return constraints_[i]; }
  std::span<const Variable> variables() const { return variables_; }
  std::span<const Constraint> constraints() const { return constraints_; }
  std::span<const double> objective() const { return objective_; }

  // Index of the variable called `name`, or -1.
  int FindVariable(absl::string_view name) const;
  int FindConstraint(absl::string_view name) const;

  // Symbol instance a variable stands for, parsed from its name.
  absl::StatusOr<SymbolInstance> SymbolOf(int var) const;

  // Every constraint references declared variables, bounds are ordered, names
  // are unique and every variable name parses as a symbol instance.
  absl::Status Validate() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<double> objective_;
  absl::flat_hash_map<std::string, int> variable_index_;
  absl::flat_hash_map<std::string, int> constraint_index_;
};

// Values for every variable of a model, in model order. NaN marks a variable
// the assignment does not cover.
struct Assignment {
  std::vector<double> values;

  static Assignment Empty(const MipModel& model) {
    return Assignment{std::vector<double>(
        model.num_variables(), std::numeric_limits<double>::quiet_NaN())};
  }
  bool has(int var) const { return !std::isnan(values[var]); }
};

double ObjectiveValue(const MipModel& model, const Assignment& assignment);

}  // namespace pwtame::formulation

#endif  // PWTAME_FORMULATION_MIP_MODEL_H_

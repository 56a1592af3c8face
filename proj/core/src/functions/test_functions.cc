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

#include "pwtame/functions/test_functions.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace pwtame::functions {

double EvalL1(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += std::abs(v);
  return sum;
}

double EvalLinf(std::span<const double> x) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

double EvalCone(std::span<const double> x, double r, double s) {
  const double x1 = x[0];
  const double x2 = x[1];
  if (x1 > 0.0) {
    if (x2 >= 0.0 && x2 < r * x1) return -s * x1 + (1.0 + s) / r * x2;
    if (x2 < 0.0 && -x2 < r * x1) return -s * x1 - (1.0 + s) / r * x2;
  }
  return EvalLinf(x);
}

absl::StatusOr<FunctionKind> ParseFunctionKind(absl::string_view name) {
  if (name == "l1") return FunctionKind::kL1;
  if (name == "linf") return FunctionKind::kLinf;
  if (name == "cone") return FunctionKind::kCone;
  if (name == "grid") return FunctionKind::kGrid;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown function '", name, "' (l1|linf|cone|grid)"));
}

std::string FunctionKindName(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kL1:
      return "l1";
    case FunctionKind::kLinf:
      return "linf";
    case FunctionKind::kCone:
      return "cone";
    case FunctionKind::kGrid:
      return "grid";
  }
  return "unknown";
}

absl::StatusOr<TestFunction> MakeTestFunction(FunctionKind kind,
                                              ConeParams cone) {
  switch (kind) {
    case FunctionKind::kL1:
      return TestFunction(EvalL1);
    case FunctionKind::kLinf:
      return TestFunction(EvalLinf);
    case FunctionKind::kCone:
      if (!(cone.r > 0.0 && cone.r <= 1.0) || !(cone.s >= 0.0)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "cone parameters need r in (0,1] and s >= 0, got r=", cone.r,
            " s=", cone.s));
      }
      return TestFunction([cone](std::span<const double> x) {
        return EvalCone(x, cone.r, cone.s);
      });
    case FunctionKind::kGrid:
      break;
  }
  return absl::InvalidArgumentError(
      "the grid signal has no closed-form test function");
}

}  // namespace pwtame::functions

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

#ifndef PWTAME_EXPERIMENTS_GRID_H_
#define PWTAME_EXPERIMENTS_GRID_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/tree/model.h"

namespace pwtame::experiments {

// resolution x resolution values over [0,1]^2. Row r holds u2 = r/(res-1),
// column c holds u1 = c/(res-1).
struct Grid {
  int resolution = 0;
  std::vector<double> values;

  double at(int row, int col) const { return values[row * resolution + col]; }
};

// Function of a unit-square point.
using UnitFunction = std::function<absl::StatusOr<double>(std::span<const double>)>;

absl::StatusOr<Grid> EvalFunctionGrid(const UnitFunction& f, int resolution);

// Model predictions on the grid; the model must be two-dimensional.
absl::StatusOr<Grid> EvalGrid(const tree::PwPolyModel& model, int resolution);

// max |a - b| over the cells.
absl::StatusOr<double> SupNormDistance(const Grid& a, const Grid& b);

// Row-major numeric matrix, one grid row per line, no header.
std::string GridToCsv(const Grid& grid);
absl::StatusOr<Grid> GridFromCsv(absl::string_view text);

}  // namespace pwtame::experiments

#endif  // PWTAME_EXPERIMENTS_GRID_H_

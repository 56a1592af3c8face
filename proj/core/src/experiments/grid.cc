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

#include "pwtame/experiments/grid.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace pwtame::experiments {

absl::StatusOr<Grid> EvalFunctionGrid(const UnitFunction& f, int resolution) {
  if (resolution < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid resolution must be at least 2, got ", resolution));
  }
  Grid grid;
  grid.resolution = resolution;
  grid.values.reserve(static_cast<size_t>(resolution) * resolution);
  const double step = 1.0 / (resolution - 1);
  std::array<double, 2> u;
  for (int r = 0; r < resolution; ++r) {
    for (int c = 0; c < resolution; ++c) {
      u = {c * step, r * step};
      absl::StatusOr<double> v = f(u);
      if (!v.ok()) return v.status();
      grid.values.push_back(*v);
    }
  }
  return grid;
}

absl::StatusOr<Grid> EvalGrid(const tree::PwPolyModel& model, int resolution) {
  if (model.dimension() != 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "grid evaluation needs a 2-dimensional model, got dimension ",
        model.dimension()));
  }
  return EvalFunctionGrid(
      [&model](std::span<const double> u) { return model.Predict(u); },
      resolution);
}

absl::StatusOr<double> SupNormDistance(const Grid& a, const Grid& b) {
  if (a.resolution != b.resolution || a.values.size() != b.values.size()) {
    return absl::InvalidArgumentError("grids differ in resolution");
  }
  double worst = 0.0;
  for (size_t k = 0; k < a.values.size(); ++k) {
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
  }
  return worst;
}

std::string GridToCsv(const Grid& grid) {
  std::string out;
  for (int r = 0; r < grid.resolution; ++r) {
    for (int c = 0; c < grid.resolution; ++c) {
      if (c > 0) out += ',';
      absl::StrAppendFormat(&out, "%.12g", grid.at(r, c));
    }
    out += '\n';
  }
  return out;
}

absl::StatusOr<Grid> GridFromCsv(absl::string_view text) {
  Grid grid;
  int rows = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    line = absl::StripTrailingAsciiWhitespace(line);
    if (line.empty()) continue;
    int cols = 0;
    for (absl::string_view field : absl::StrSplit(line, ',')) {
      double v = 0.0;
      if (!absl::SimpleAtod(field, &v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("grid row ", rows + 1, ": bad number '", field, "'"));
      }
      grid.values.push_back(v);
      ++cols;
    }
    if (rows == 0) grid.resolution = cols;
    if (cols != grid.resolution) {
      return absl::InvalidArgumentError(
          absl::StrCat("grid row ", rows + 1, " has ", cols, " values, expected ",
                       grid.resolution));
    }
    ++rows;
  }
  if (rows != grid.resolution || rows < 2) {
    return absl::InvalidArgumentError("grid is not a square matrix");
  }
  return grid;
}

}  // namespace pwtame::experiments

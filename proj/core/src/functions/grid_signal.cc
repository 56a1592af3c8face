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

#include "pwtame/functions/grid_signal.h"

#include <vector>

#include "absl/strings/str_cat.h"
#include "pwtame/functions/domain.h"
#include "pwtame/functions/rng.h"

namespace pwtame::functions {

absl::Status GridSignalSpec::Validate() const {
  if (grid_size < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid size must be at least 2, got ", grid_size));
  }
  if (!(noise_sigma >= 0.0)) {
    return absl::InvalidArgumentError("noise sigma must be nonnegative");
  }
  std::vector<int> owner(static_cast<size_t>(grid_size) * grid_size, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    const GridBlock& block = blocks[b];
    if (block.row_begin < 0 || block.col_begin < 0 ||
        block.row_end > grid_size || block.col_end > grid_size ||
        block.row_begin >= block.row_end || block.col_begin >= block.col_end) {
      return absl::InvalidArgumentError(
          absl::StrCat("block ", b, " is empty or leaves the grid"));
    }
    for (int r = block.row_begin; r < block.row_end; ++r) {
      for (int c = block.col_begin; c < block.col_end; ++c) {
        int& cell = owner[static_cast<size_t>(r) * grid_size + c];
        if (cell >= 0) {
          return absl::InvalidArgumentError(absl::StrCat(
              "blocks ", cell, " and ", b, " overlap at cell (", r, ",", c,
              ")"));
        }
        cell = static_cast<int>(b);
      }
    }
  }
  for (size_t k = 0; k < owner.size(); ++k) {
    if (owner[k] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("cell (", k / grid_size, ",", k % grid_size,
                       ") is not covered by any block"));
    }
  }
  return absl::OkStatus();
}

int GridSignalSpec::BlockOf(int row, int col) const {
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].Contains(row, col)) return static_cast<int>(b);
  }
  return -1;
}

absl::StatusOr<std::vector<GridBlock>> PresetBlocks(absl::string_view name,
                                                    int grid_size) {
  const int g = grid_size;
  if (g < 2) return absl::InvalidArgumentError("grid size must be >= 2");
  const int half = g / 2;
  if (name == "quadrants") {
    return std::vector<GridBlock>{{0, half, 0, half, 0.0},
                                  {0, half, half, g, 1.0},
                                  {half, g, 0, half, 2.0},
                                  {half, g, half, g, 3.0}};
  }
  if (name == "bands") {
    if (g < 3) return absl::InvalidArgumentError("bands need grid size >= 3");
    const int a = g / 3, b = 2 * g / 3;
    return std::vector<GridBlock>{
        {0, g, 0, a, 0.0}, {0, g, a, b, 2.0}, {0, g, b, g, 1.0}};
  }
  if (name == "square") {
    if (g < 4) return absl::InvalidArgumentError("square needs grid size >= 4");
    const int lo = g / 4, hi = g - g / 4;
    return std::vector<GridBlock>{{0, lo, 0, g, 0.0},
                                  {hi, g, 0, g, 0.0},
                                  {lo, hi, 0, lo, 0.0},
                                  {lo, hi, hi, g, 0.0},
                                  {lo, hi, lo, hi, 2.0}};
  }
  if (name == "steps") {
    if (g < 3) return absl::InvalidArgumentError("steps need grid size >= 3");
    const int a = g / 3, b = 2 * g / 3;
    return std::vector<GridBlock>{{0, a, 0, g, 0.0},
                                  {a, b, 0, b, 1.0},
                                  {a, b, b, g, 0.0},
                                  {b, g, 0, a, 2.0},
                                  {b, g, a, g, 1.0}};
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown block preset '", name, "' (quadrants|bands|square|steps)"));
}

absl::StatusOr<SampleSet> MakeGridSignal(const GridSignalSpec& spec) {
  if (absl::Status status = spec.Validate(); !status.ok()) return status;
  const int g = spec.grid_size;
  SampleSet samples;
  samples.dimension = 2;
  samples.seed = spec.seed;
  samples.transform = ScaleTransform::UnitCube(2);
  samples.points.reserve(static_cast<size_t>(2) * g * g);
  samples.values.reserve(static_cast<size_t>(g) * g);
  Rng rng(spec.seed);
  for (int r = 0; r < g; ++r) {
    for (int c = 0; c < g; ++c) {
      const double u1 = RoundToGrid((c + 0.5) / g);
      const double u2 = RoundToGrid((r + 0.5) / g);
      samples.points.push_back(u1);
      samples.points.push_back(u2);
      double value = spec.blocks[spec.BlockOf(r, c)].value;
      if (spec.noise_sigma > 0.0) value += spec.noise_sigma * rng.Normal();
      samples.values.push_back(value);
    }
  }
  samples.raw_points = samples.points;
  return samples;
}

}  // namespace pwtame::functions

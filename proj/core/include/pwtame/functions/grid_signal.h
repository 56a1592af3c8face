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

#ifndef PWTAME_FUNCTIONS_GRID_SIGNAL_H_
#define PWTAME_FUNCTIONS_GRID_SIGNAL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/functions/sample_set.h"

namespace pwtame::functions {

// Half-open rectangle of grid cells [row_begin, row_end) x [col_begin, col_end)
// carrying a constant value. Row r covers x2 in [r/G, (r+1)/G), column c covers
// x1 in [c/G, (c+1)/G).
struct GridBlock {
  int row_begin = 0;
  int row_end = 0;
  int col_begin = 0;
  int col_end = 0;
  double value = 0.0;

  int cell_count() const { return (row_end - row_begin) * (col_end - col_begin); }
  bool Contains(int row, int col) const {
    return row >= row_begin && row < row_end && col >= col_begin &&
           col < col_end;
  }
};

struct GridSignalSpec {
  int grid_size = 25;
  std::vector<GridBlock> blocks;
  double noise_sigma = 0.5;
  uint64_t seed = 0;

  // Blocks must tile the grid with no gap and no overlap.
  absl::Status Validate() const;
  // Index into `blocks` of the block holding cell (row, col), or -1.
  int BlockOf(int row, int col) const;
};

// Named block layouts: "quadrants" (values 0,1,2,3), "bands" (three vertical
// bands), "square" (centered square on a background), "steps" (staircase of
// three levels).
absl::StatusOr<std::vector<GridBlock>> PresetBlocks(absl::string_view name,
                                                    int grid_size);

// One sample per cell at the cell center, cells in row-major order
// (sample index = row * G + col). Values are the block constant plus
// N(0, sigma^2) noise drawn in cell order from Rng(seed).
absl::StatusOr<SampleSet> MakeGridSignal(const GridSignalSpec& spec);

}  // namespace pwtame::functions

#endif  // PWTAME_FUNCTIONS_GRID_SIGNAL_H_

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

#ifndef PWTAME_FUNCTIONS_SAMPLE_SET_H_
#define PWTAME_FUNCTIONS_SAMPLE_SET_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/functions/domain.h"

namespace pwtame::functions {

// Labeled points on the unit cube. Points are stored row-major (n x d).
struct SampleSet {
  int dimension = 0;
  std::vector<double> points;
  std::vector<double> values;
  uint64_t seed = 0;
  ScaleTransform transform;
  // Original-domain coordinates as drawn, before scaling and rounding. Empty
  // when the set was read back from a file.
  std::vector<double> raw_points;

  int size() const { return static_cast<int>(values.size()); }
  std::span<const double> point(int i) const {
    return {points.data() + static_cast<size_t>(i) * dimension,
            static_cast<size_t>(dimension)};
  }
  std::span<const double> raw_point(int i) const {
    return {raw_points.data() + static_cast<size_t>(i) * dimension,
            static_cast<size_t>(dimension)};
  }
  double coordinate(int i, int j) const {
    return points[static_cast<size_t>(i) * dimension + j];
  }

  // The sub-sample holding rows `indices` in the given order.
  SampleSet Subset(std::span<const int> indices) const;
};

// CSV with header x1,...,xd,y. Coordinates carry 4 decimals and values 12
// significant digits.
std::string WriteSampleCsv(const SampleSet& samples);
absl::StatusOr<SampleSet> ReadSampleCsv(absl::string_view text);

}  // namespace pwtame::functions

#endif  // PWTAME_FUNCTIONS_SAMPLE_SET_H_

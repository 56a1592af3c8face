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

#ifndef PWTAME_FUNCTIONS_SAMPLING_H_
#define PWTAME_FUNCTIONS_SAMPLING_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "pwtame/functions/domain.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/functions/test_functions.h"

namespace pwtame::functions {

// Which coordinates the labels y_i are computed from.
enum class LabelSource {
  // f evaluated at the rounded unit-cube point mapped back to the domain, so
  // every training pair lies exactly on the graph of f.
  kRoundedPoint,
  // f evaluated at the point as drawn, before rounding.
  kRawPoint,
};

struct SamplingOptions {
  LabelSource labels = LabelSource::kRoundedPoint;
};

// Draws n points i.i.d. uniform on `domain` (coordinates drawn point by point,
// dimension by dimension from Rng(seed)), maps them to the unit cube and rounds
// them to the 10^-4 grid.
absl::StatusOr<SampleSet> SampleUniform(const TestFunction& f,
                                        const Domain& domain, int n,
                                        uint64_t seed,
                                        SamplingOptions options = {});

}  // namespace pwtame::functions

#endif  // PWTAME_FUNCTIONS_SAMPLING_H_

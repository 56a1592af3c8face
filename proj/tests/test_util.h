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

#ifndef PWTAME_TESTS_TEST_UTIL_H_
#define PWTAME_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pwtame/formulation/hyperparams.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/functions/test_functions.h"

namespace pwtame::testing {

// Samples on the unit square (identity transform) from explicit rows.
functions::SampleSet MakeSamples(int dimension,
                                 const std::vector<std::vector<double>>& points,
                                 const std::vector<double>& values);

// n uniform samples of `kind` on [-1,1]^2, coordinates rounded to 1e-4.
functions::SampleSet SampleFunction(functions::FunctionKind kind, int n,
                                    uint64_t seed);

// One point per quadrant of [-1,1]^2, labelled with the l1 norm.
functions::SampleSet QuadrantL1Samples();

formulation::Hyperparams Params(int depth, int degree, int min_leaf_points = 1);

std::string ReadFileOrDie(const std::string& path);

}  // namespace pwtame::testing

#endif  // PWTAME_TESTS_TEST_UTIL_H_

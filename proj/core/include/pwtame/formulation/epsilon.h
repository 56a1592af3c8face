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

#ifndef PWTAME_FORMULATION_EPSILON_H_
#define PWTAME_FORMULATION_EPSILON_H_

#include <vector>

#include "pwtame/functions/sample_set.h"

namespace pwtame::formulation {

struct EpsilonInfo {
  std::vector<double> eps;
  double eps_max = 0.0;
};

// Per dimension, the smallest gap between distinct consecutive sorted sample
// coordinates. A dimension where every sample shares one value gets eps = 1,
// which leaves no room for a left branch on it.
EpsilonInfo ComputeEpsilon(const functions::SampleSet& samples);

}  // namespace pwtame::formulation

#endif  // PWTAME_FORMULATION_EPSILON_H_

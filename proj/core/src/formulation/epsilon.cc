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

#include "pwtame/formulation/epsilon.h"

#include <algorithm>
#include <limits>
#include <vector>

namespace pwtame::formulation {

EpsilonInfo ComputeEpsilon(const functions::SampleSet& samples) {
  EpsilonInfo info;
  const int d = samples.dimension;
  info.eps.assign(d, 1.0);
  std::vector<double> column(samples.size());
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < samples.size(); ++i) {
      column[i] = samples.coordinate(i, j);
    }
    std::sort(column.begin(), column.end());
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < column.size(); ++i) {
      if (column[i + 1] != column[i]) {
        best = std::min(best, column[i + 1] - column[i]);
      }
    }
    if (best != std::numeric_limits<double>::infinity()) info.eps[j] = best;
  }
  info.eps_max = d > 0 ? *std::max_element(info.eps.begin(), info.eps.end())
                       : 0.0;
  return info;
}

}  // namespace pwtame::formulation

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

#ifndef PWTAME_SOLVER_PROPAGATION_H_
#define PWTAME_SOLVER_PROPAGATION_H_

#include <vector>

#include "pwtame/formulation/mip_model.h"

namespace pwtame::solver {

// Activity-based bound tightening over the rows of a MipModel. For a row
// L <= sum_k a_k x_k <= U, the smallest and largest activity under the
// current box bound every single x_k; implied bounds of binaries are rounded
// to {0, 1}. Big-M rows are where this pays off: once z_{i,t} = 1 pins a
// threshold, the rows of other points stop admitting fractional z and the
// geometrically impossible assignments are fixed to 0 before the LP sees
// them.
class BoundPropagator {
 public:
  explicit BoundPropagator(const formulation::MipModel& model);

  // Tightens [lower, upper] in place until no row changes a bound by more
  // than the tolerance (or the work budget runs out). Returns false when some
  // row cannot be satisfied or a box becomes empty.
  bool Propagate(std::vector<double>& lower, std::vector<double>& upper) const;

 private:
  bool TightenRow(int row, std::vector<double>& lower,
                  std::vector<double>& upper, std::vector<int>& changed) const;

  const formulation::MipModel& model_;
  std::vector<std::vector<int>> rows_of_column_;
  std::vector<char> binary_;
};

}  // namespace pwtame::solver

#endif  // PWTAME_SOLVER_PROPAGATION_H_

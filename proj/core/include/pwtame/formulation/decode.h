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

#ifndef PWTAME_FORMULATION_DECODE_H_
#define PWTAME_FORMULATION_DECODE_H_

#include "absl/status/statusor.h"
#include "pwtame/formulation/hyperparams.h"
#include "pwtame/formulation/mip_model.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/tree/model.h"

namespace pwtame::formulation {

// Turns a feasible assignment of a formulation built from `samples` into an
// evaluable model. The split kind is read off the model (o variables mark the
// hyperplane formulation).
//
// Thresholds are canonicalized: among all b that send the training points
// reaching node m the way z assigns them, the decoder keeps the simplest one
// (see SimplestDecimalIn).
// Hyperplane normals are rescaled to unit l1 norm. Empty leaves decode as
// inactive with zero coefficients. Fails if the resulting model routes any
// training point to a leaf other than its z leaf.
absl::StatusOr<tree::PwPolyModel> Decode(const MipModel& model,
                                         const Assignment& assignment,
                                         const functions::SampleSet& samples,
                                         const Hyperparams& params);

// The inverse direction: the full assignment (z, l, splits, c, phi, delta)
// that represents `tree_model` on `samples` in `model`. Points are assigned to
// the leaf the tree routes them to; the result is feasible iff the tree
// satisfies the formulation's constraints on those points.
absl::StatusOr<Assignment> Encode(const MipModel& model,
                                  const tree::PwPolyModel& tree_model,
                                  const functions::SampleSet& samples);

// The number in [lo, hi] on the coarsest grid of the ladder 1, 1/2, 1/10,
// 1/20, 1/100, ... (closest to (lo + hi) / 2 on that grid); falls back to the
// midpoint when no grid down to 10^-15 fits.
double SimplestDecimalIn(double lo, double hi);

}  // namespace pwtame::formulation

#endif  // PWTAME_FORMULATION_DECODE_H_

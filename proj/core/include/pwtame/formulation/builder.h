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

#ifndef PWTAME_FORMULATION_BUILDER_H_
#define PWTAME_FORMULATION_BUILDER_H_

#include "absl/status/statusor.h"
#include "pwtame/formulation/hyperparams.h"
#include "pwtame/formulation/mip_model.h"
#include "pwtame/functions/sample_set.h"

namespace pwtame::formulation {

// Optimal piecewise-polynomial regression tree as a mixed-binary program.
//
// Both formulations share, for samples i, leaves t and basis monomials k:
//   min (1/n) sum_i delta_i
//   delta_i >= +phi_it - M (1 - z_it)            (row dpos_i_t)
//   delta_i >= -phi_it - M (1 - z_it)            (row dneg_i_t)
//   phi_it = y_i - sum_k c_tk x_i^(e_k)          (row phi_i_t)
//   sum_t z_it = 1                               (row assign_i)
//   z_it <= l_t                                  (row zl_i_t)
//   sum_i z_it >= N_min l_t                      (row nmin_t)
//   z, l binary; delta >= 0; phi free; c in [-C, C].
// Axis-aligned splits, for branch nodes m on the path to t:
//   a_m^T x_i >= b_m - (1 - z_it)                      m in A_R(t)  (right_i_t_m)
//   a_m^T (x_i + eps) <= b_m + (1 + eps_max)(1 - z_it) m in A_L(t)  (left_i_t_m)
//   sum_j a_jm = 1 (asum_m); a binary; b in [0, 1].
// Hyperplane splits:
//   a_m^T x_i >= b_m - 2 (1 - z_it)                    m in A_R(t)
//   a_m^T x_i + mu <= b_m + (2 + mu)(1 - z_it)         m in A_L(t)
//   sum_j (ap_jm + am_jm) = 1 (anorm_m); a_jm = ap_jm - am_jm (asplit_j_m);
//   ap_jm <= o_jm (apos_j_m); am_jm <= 1 - o_jm (aneg_j_m);
//   a in [-1, 1]; ap, am in [0, 1]; o binary; b in [-1, 1].
//
// Variables are declared split block first (a / a,ap,am,o, then b), then l, z,
// c, phi, delta; indices are 1-based except the monomial index k.
absl::StatusOr<MipModel> BuildAxisAligned(const functions::SampleSet& samples,
                                          const Hyperparams& params);
absl::StatusOr<MipModel> BuildHyperplane(const functions::SampleSet& samples,
                                         const Hyperparams& params);
absl::StatusOr<MipModel> BuildFormulation(FormulationKind kind,
                                          const functions::SampleSet& samples,
                                          const Hyperparams& params);

struct ModelSize {
  long long variables = 0;
  long long binaries = 0;
  long long constraints = 0;
};

// Closed-form sizes. With L = 2^D leaves, B = 2^D - 1 branch nodes and
// K = C(r+d, d):
//   rows shared       = 2nL (delta) + nL (phi) + nLD (splits) + n + nL + L
//   axis extra rows   = B;            axis variables  = dB + B + L + nL + LK + nL + n
//   hplane extra rows = B + 3dB;      hplane variables = 4dB + B + L + nL + LK + nL + n
//   binaries          = nL + L + dB (a or o).
ModelSize ExpectedModelSize(FormulationKind kind, long long n, int d, int depth,
                            int degree);

}  // namespace pwtame::formulation

#endif  // PWTAME_FORMULATION_BUILDER_H_

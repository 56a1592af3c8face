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

#include "pwtame/functions/sampling.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "pwtame/functions/rng.h"

namespace pwtame::functions {

absl::StatusOr<SampleSet> SampleUniform(const TestFunction& f,
                                        const Domain& domain, int n,
                                        uint64_t seed,
                                        SamplingOptions options) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample count must be positive, got ", n));
  }
  if (absl::Status status = domain.Validate(); !status.ok()) return status;

  const int d = domain.dimension();
  SampleSet samples;
  samples.dimension = d;
  samples.seed = seed;
  samples.transform = ScaleTransform::ForDomain(domain);
  samples.points.resize(static_cast<size_t>(n) * d);
  samples.raw_points.resize(static_cast<size_t>(n) * d);
  samples.values.resize(n);

  Rng rng(seed);
  std::vector<double> raw(d), unit(d), label_point(d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      raw[j] = domain.center[j] + domain.radius * (2.0 * rng.Uniform() - 1.0);
    }
    samples.transform.ToUnit(raw, unit);
    for (int j = 0; j < d; ++j) {
      unit[j] = RoundToGrid(std::clamp(unit[j], 0.0, 1.0));
      samples.points[static_cast<size_t>(i) * d + j] = unit[j];
      samples.raw_points[static_cast<size_t>(i) * d + j] = raw[j];
    }
    double y = 0.0;
    if (options.labels == LabelSource::kRawPoint) {
      y = f(raw);
    } else {
      samples.transform.FromUnit(unit, label_point);
      y = f(label_point);
    }
    if (!std::isfinite(y)) {
      return absl::InvalidArgumentError(
          absl::StrCat("test function is not finite at sample ", i, " (",
                       absl::StrJoin(raw, ", "), ")"));
    }
    samples.values[i] = y;
  }
  return samples;
}

}  // namespace pwtame::functions

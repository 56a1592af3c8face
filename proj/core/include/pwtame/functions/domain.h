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

#ifndef PWTAME_FUNCTIONS_DOMAIN_H_
#define PWTAME_FUNCTIONS_DOMAIN_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace pwtame::functions {

// Axis-aligned box center + radius * [-1, 1]^d.
struct Domain {
  std::vector<double> center;
  double radius = 1.0;

  int dimension() const { return static_cast<int>(center.size()); }
  absl::Status Validate() const;
};

// Parses "c±r" (or the ASCII spelling "c+-r"). The center is either one value
// broadcast to `dimension` coordinates or a comma list of exactly `dimension`
// values, e.g. "0±1" or "0.5,-1±2".
absl::StatusOr<Domain> ParseDomain(absl::string_view text, int dimension);

// Affine correspondence between a Domain and the unit cube:
// unit = (x - center) / (2 radius) + 1/2.
struct ScaleTransform {
  std::vector<double> center;
  double radius = 0.5;

  static ScaleTransform ForDomain(const Domain& domain) {
    return ScaleTransform{domain.center, domain.radius};
  }
  // The identity map on [0, 1]^d.
  static ScaleTransform UnitCube(int dimension) {
    return ScaleTransform{std::vector<double>(dimension, 0.5), 0.5};
  }

  int dimension() const { return static_cast<int>(center.size()); }
  void ToUnit(std::span<const double> x, std::span<double> unit) const;
  void FromUnit(std::span<const double> unit, std::span<double> x) const;
  std::vector<double> FromUnit(std::span<const double> unit) const;
};

// Rounds to the 10^-4 grid the samplers place unit-cube coordinates on.
double RoundToGrid(double value);
inline constexpr double kCoordinateResolution = 1e-4;

}  // namespace pwtame::functions

#endif  // PWTAME_FUNCTIONS_DOMAIN_H_

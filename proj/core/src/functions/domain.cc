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

#include "pwtame/functions/domain.h"

#include <cmath>
#include <string>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"

namespace pwtame::functions {

absl::Status Domain::Validate() const {
  if (center.empty()) {
    return absl::InvalidArgumentError("domain dimension must be at least 1");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    return absl::InvalidArgumentError(
        absl::StrCat("domain radius must be positive, got ", radius));
  }
  for (double c : center) {
    if (!std::isfinite(c)) {
      return absl::InvalidArgumentError("domain center must be finite");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Domain> ParseDomain(absl::string_view text, int dimension) {
  if (dimension < 1) {
    return absl::InvalidArgumentError("dimension must be at least 1");
  }
  // U+00B1 in UTF-8, then the ASCII fallback.
  absl::string_view separator = "\xC2\xB1";
  size_t pos = text.find(separator);
  if (pos == absl::string_view::npos) {
    separator = "+-";
    pos = text.find(separator);
  }
  if (pos == absl::string_view::npos) {
    return absl::InvalidArgumentError(
        absl::StrCat("domain '", text, "' is not of the form c±r"));
  }
  const absl::string_view center_text =
      absl::StripAsciiWhitespace(text.substr(0, pos));
  const absl::string_view radius_text =
      absl::StripAsciiWhitespace(text.substr(pos + separator.size()));

  Domain domain;
  if (!absl::SimpleAtod(radius_text, &domain.radius)) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot parse domain radius '", radius_text, "'"));
  }
  std::vector<double> values;
  for (absl::string_view part : absl::StrSplit(center_text, ',')) {
    double v = 0.0;
    if (!absl::SimpleAtod(absl::StripAsciiWhitespace(part), &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("cannot parse domain center '", center_text, "'"));
    }
    values.push_back(v);
  }
  if (values.size() == 1) {
    domain.center.assign(dimension, values[0]);
  } else if (static_cast<int>(values.size()) == dimension) {
    domain.center = std::move(values);
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("domain center has ", values.size(),
                     " coordinates, expected 1 or ", dimension));
  }
  if (absl::Status status = domain.Validate(); !status.ok()) return status;
  return domain;
}

void ScaleTransform::ToUnit(std::span<const double> x,
                            std::span<double> unit) const {
  for (size_t j = 0; j < center.size(); ++j) {
    unit[j] = (x[j] - center[j]) / (2.0 * radius) + 0.5;
  }
}

void ScaleTransform::FromUnit(std::span<const double> unit,
                              std::span<double> x) const {
  for (size_t j = 0; j < center.size(); ++j) {
    x[j] = center[j] + 2.0 * radius * (unit[j] - 0.5);
  }
}

std::vector<double> ScaleTransform::FromUnit(
    std::span<const double> unit) const {
  std::vector<double> x(center.size());
  FromUnit(unit, x);
  return x;
}

double RoundToGrid(double value) {
  return std::round(value / kCoordinateResolution) * kCoordinateResolution;
}

}  // namespace pwtame::functions

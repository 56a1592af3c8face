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

#include "pwtame/functions/sample_set.h"

#include <cmath>
#include <string>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace pwtame::functions {

SampleSet SampleSet::Subset(std::span<const int> indices) const {
  SampleSet out;
  out.dimension = dimension;
  out.seed = seed;
  out.transform = transform;
  out.points.reserve(indices.size() * dimension);
  out.values.reserve(indices.size());
  for (int i : indices) {
    auto p = point(i);
    out.points.insert(out.points.end(), p.begin(), p.end());
    out.values.push_back(values[i]);
    if (!raw_points.empty()) {
      auto r = raw_point(i);
      out.raw_points.insert(out.raw_points.end(), r.begin(), r.end());
    }
  }
  return out;
}

std::string WriteSampleCsv(const SampleSet& samples) {
  std::string out;
  for (int j = 0; j < samples.dimension; ++j) {
    absl::StrAppend(&out, "x", j + 1, ",");
  }
  out += "y\n";
  for (int i = 0; i < samples.size(); ++i) {
    for (double v : samples.point(i)) absl::StrAppendFormat(&out, "%.4f,", v);
    absl::StrAppendFormat(&out, "%.12g\n", samples.values[i]);
  }
  return out;
}

absl::StatusOr<SampleSet> ReadSampleCsv(absl::string_view text) {
  std::vector<absl::string_view> lines =
      absl::StrSplit(text, '\n', absl::SkipWhitespace());
  if (lines.empty()) return absl::InvalidArgumentError("empty sample file");

  std::vector<absl::string_view> header = absl::StrSplit(lines[0], ',');
  const int columns = static_cast<int>(header.size());
  if (columns < 2) {
    return absl::InvalidArgumentError("sample header needs x1,...,xd,y");
  }
  for (int j = 0; j + 1 < columns; ++j) {
    if (absl::StripAsciiWhitespace(header[j]) != absl::StrCat("x", j + 1)) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample header column ", j + 1, " should be x", j + 1));
    }
  }
  if (absl::StripAsciiWhitespace(header.back()) != "y") {
    return absl::InvalidArgumentError("last sample header column must be y");
  }

  SampleSet samples;
  samples.dimension = columns - 1;
  samples.transform = ScaleTransform::UnitCube(samples.dimension);
  for (size_t line = 1; line < lines.size(); ++line) {
    std::vector<absl::string_view> fields = absl::StrSplit(lines[line], ',');
    if (static_cast<int>(fields.size()) != columns) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line + 1, " has ", fields.size(), " fields, expected ",
          columns));
    }
    for (int j = 0; j < columns; ++j) {
      double v = 0.0;
      if (!absl::SimpleAtod(absl::StripAsciiWhitespace(fields[j]), &v) ||
          !std::isfinite(v)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line + 1, ": cannot parse '", fields[j], "'"));
      }
      if (j + 1 < columns) {
        if (v < 0.0 || v > 1.0) {
          return absl::InvalidArgumentError(absl::StrCat(
              "line ", line + 1, ": coordinate ", v, " outside [0,1]"));
        }
        samples.points.push_back(v);
      } else {
        samples.values.push_back(v);
      }
    }
  }
  return samples;
}

}  // namespace pwtame::functions

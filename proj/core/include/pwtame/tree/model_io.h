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

#ifndef PWTAME_TREE_MODEL_IO_H_
#define PWTAME_TREE_MODEL_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/tree/model.h"

namespace pwtame::tree {

inline constexpr int kModelFormatVersion = 1;

// JSON document:
//   {"format": "pwtame-model", "version": 1, "split_kind": "axis_aligned",
//    "depth": D, "dimension": d, "degree": r, "epsilon": [...],
//    "splits": [{"node": m, "a": [...], "b": b}, ...],
//    "leaves": [{"node": t, "active": true, "coeffs": [...]}, ...]}
// Reals are written with enough digits to round-trip exactly.
std::string ModelToJson(const PwPolyModel& model);
absl::StatusOr<PwPolyModel> ModelFromJson(absl::string_view text);

}  // namespace pwtame::tree

#endif  // PWTAME_TREE_MODEL_IO_H_

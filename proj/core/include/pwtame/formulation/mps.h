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

#ifndef PWTAME_FORMULATION_MPS_H_
#define PWTAME_FORMULATION_MPS_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/formulation/mip_model.h"

namespace pwtame::formulation {

struct MpsFiles {
  std::string mps;
  // CSV "mps_name,paper_symbol" mapping every mangled row/column name back to
  // the model name.
  std::string name_table;
};

// Fixed-format MPS. Column names are C0000001..., row names R0000001..., the
// objective row is OBJ, and names sit in the fixed fields. Numbers use the
// shortest decimal that reads back to the same double, so a value longer than
// the 12-character field pushes later fields right; readers that split on
// whitespace (every mainstream solver when names hold no spaces) parse it.
// Binary columns sit between INTORG/INTEND markers with bounds [0, 1].
MpsFiles ExportMps(const MipModel& model, absl::string_view model_name = "PWTAME");

// Reads fixed or free MPS as written by ExportMps (and the common subset other
// tools emit: N/L/G/E rows, MARKER blocks, RHS, RANGES, UP/LO/FX/FR/MI/PL/BV
// bounds). With a name table, names are translated back.
absl::StatusOr<MipModel> ImportMps(absl::string_view mps,
                                   absl::string_view name_table = {});

// mps name -> model name, parsed from a name table.
absl::StatusOr<absl::flat_hash_map<std::string, std::string>> ParseNameTable(
    absl::string_view name_table);

}  // namespace pwtame::formulation

#endif  // PWTAME_FORMULATION_MPS_H_

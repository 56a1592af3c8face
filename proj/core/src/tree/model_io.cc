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

#include "pwtame/tree/model_io.h"

#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace pwtame::tree {

using nlohmann::json;

std::string ModelToJson(const PwPolyModel& model) {
  json doc;
  doc["format"] = "pwtame-model";
  doc["version"] = kModelFormatVersion;
  doc["split_kind"] = SplitKindName(model.split_kind());
  doc["depth"] = model.depth();
  doc["dimension"] = model.dimension();
  doc["degree"] = model.degree();
  doc["epsilon"] = std::vector<double>(model.epsilon().begin(),
                                       model.epsilon().end());
  json splits = json::array();
  for (int m = 1; m <= model.shape().num_branch_nodes(); ++m) {
    splits.push_back(
        {{"node", m}, {"a", model.split(m).a}, {"b", model.split(m).b}});
  }
  doc["splits"] = std::move(splits);
  json leaves = json::array();
  for (int t : model.shape().leaves()) {
    leaves.push_back({{"node", t},
                      {"active", model.leaf(t).active},
                      {"coeffs", model.leaf(t).coeffs}});
  }
  doc["leaves"] = std::move(leaves);
  return doc.dump(2) + "\n";
}

absl::StatusOr<PwPolyModel> ModelFromJson(absl::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("model file is not a JSON object");
  }
  for (const char* key : {"version", "split_kind", "depth", "dimension",
                          "degree", "epsilon", "splits", "leaves"}) {
    if (!doc.contains(key)) {
      return absl::InvalidArgumentError(
          absl::StrCat("model file is missing field '", key, "'"));
    }
  }
  try {
    const int version = doc.at("version").get<int>();
    if (version < 1 || version > kModelFormatVersion) {
      return absl::InvalidArgumentError(
          absl::StrCat("unsupported model format version ", version));
    }
    absl::StatusOr<SplitKind> kind =
        ParseSplitKind(doc.at("split_kind").get<std::string>());
    if (!kind.ok()) return kind.status();
    const int depth = doc.at("depth").get<int>();
    const int dimension = doc.at("dimension").get<int>();
    const int degree = doc.at("degree").get<int>();
    auto epsilon = doc.at("epsilon").get<std::vector<double>>();

    absl::StatusOr<TreeShape> shape = TreeShape::Create(depth);
    if (!shape.ok()) return shape.status();
    std::vector<Split> splits(shape->num_branch_nodes());
    std::vector<char> seen_split(splits.size(), 0);
    for (const json& entry : doc.at("splits")) {
      const int m = entry.at("node").get<int>();
      if (!shape->is_branch(m) || seen_split[m - 1]) {
        return absl::InvalidArgumentError(
            absl::StrCat("bad or repeated split node ", m));
      }
      seen_split[m - 1] = 1;
      splits[m - 1].a = entry.at("a").get<std::vector<double>>();
      splits[m - 1].b = entry.at("b").get<double>();
    }
    std::vector<Leaf> leaves(shape->num_leaves());
    std::vector<char> seen_leaf(leaves.size(), 0);
    for (const json& entry : doc.at("leaves")) {
      const int t = entry.at("node").get<int>();
      if (!shape->is_leaf(t) || seen_leaf[shape->leaf_position(t)]) {
        return absl::InvalidArgumentError(
            absl::StrCat("bad or repeated leaf node ", t));
      }
      seen_leaf[shape->leaf_position(t)] = 1;
      Leaf& leaf = leaves[shape->leaf_position(t)];
      leaf.active = entry.at("active").get<bool>();
      leaf.coeffs = entry.at("coeffs").get<std::vector<double>>();
    }
    for (char s : seen_split) {
      if (!s) return absl::InvalidArgumentError("model file misses a split");
    }
    for (char s : seen_leaf) {
      if (!s) return absl::InvalidArgumentError("model file misses a leaf");
    }
    return PwPolyModel::Create(depth, dimension, degree, *kind,
                               std::move(epsilon), std::move(splits),
                               std::move(leaves));
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed model file: ", e.what()));
  }
}

}  // namespace pwtame::tree

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

#include "pwtame/tree/tree_shape.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace pwtame::tree {

absl::StatusOr<TreeShape> TreeShape::Create(int depth) {
  if (depth < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("tree depth must be nonnegative, got ", depth));
  }
  if (depth > kMaxDepth) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "tree depth ", depth, " exceeds the supported maximum ", kMaxDepth));
  }
  return TreeShape(depth);
}

TreeShape::TreeShape(int depth) : depth_(depth) {
  left_ancestors_.resize(num_leaves());
  right_ancestors_.resize(num_leaves());
  for (int t = first_leaf(); t <= last_leaf(); ++t) {
    std::vector<int>& lefts = left_ancestors_[t - first_leaf()];
    std::vector<int>& rights = right_ancestors_[t - first_leaf()];
    for (int child = t; child > 1; child = parent(child)) {
      const int p = parent(child);
      (child == left(p) ? lefts : rights).push_back(p);
    }
    std::reverse(lefts.begin(), lefts.end());
    std::reverse(rights.begin(), rights.end());
  }
}

std::vector<int> TreeShape::branch_nodes() const {
  std::vector<int> nodes;
  for (int t = 1; t < first_leaf(); ++t) nodes.push_back(t);
  return nodes;
}

std::vector<int> TreeShape::leaves() const {
  std::vector<int> nodes;
  for (int t = first_leaf(); t <= last_leaf(); ++t) nodes.push_back(t);
  return nodes;
}

std::vector<int> TreeShape::ancestors(int t) const {
  std::vector<int> out;
  for (int p = parent(t); p >= 1; p = parent(p)) out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace pwtame::tree

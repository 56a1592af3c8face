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

#ifndef PWTAME_TREE_TREE_SHAPE_H_
#define PWTAME_TREE_TREE_SHAPE_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace pwtame::tree {

inline constexpr int kMaxDepth = 8;

// Complete binary tree of depth D with heap indexing: the root is node 1,
// children of t are 2t and 2t+1, branch nodes are 1..2^D-1 and leaves are
// 2^D..2^(D+1)-1.
class TreeShape {
 public:
  static absl::StatusOr<TreeShape> Create(int depth);

  int depth() const { return depth_; }
  int num_nodes() const { return (1 << (depth_ + 1)) - 1; }
  int num_branch_nodes() const { return (1 << depth_) - 1; }
  int num_leaves() const { return 1 << depth_; }
  int first_leaf() const { return 1 << depth_; }
  int last_leaf() const { return (1 << (depth_ + 1)) - 1; }
  bool is_leaf(int t) const { return t >= first_leaf() && t <= last_leaf(); }
  bool is_branch(int t) const { return t >= 1 && t < first_leaf(); }

  static int left(int t) { return 2 * t; }
  static int right(int t) { return 2 * t + 1; }
  static int parent(int t) { return t / 2; }

  std::vector<int> branch_nodes() const;
  std::vector<int> leaves() const;

  // Ancestors of leaf t whose left (A_L) or right (A_R) branch leads to t,
  // ordered from the root down.
  std::span<const int> left_ancestors(int leaf) const {
    return left_ancestors_[leaf - first_leaf()];
  }
  std::span<const int> right_ancestors(int leaf) const {
    return right_ancestors_[leaf - first_leaf()];
  }
  // All ancestors of any node, root first.
  std::vector<int> ancestors(int t) const;

  // Position of leaf t among the leaves, 0-based.
  int leaf_position(int leaf) const { return leaf - first_leaf(); }

 private:
  explicit TreeShape(int depth);

  int depth_ = 0;
  std::vector<std::vector<int>> left_ancestors_;
  std::vector<std::vector<int>> right_ancestors_;
};

}  // namespace pwtame::tree

#endif  // PWTAME_TREE_TREE_SHAPE_H_

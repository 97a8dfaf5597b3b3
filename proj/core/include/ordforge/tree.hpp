#pragma once

#include <set>
#include <vector>

#include "ordforge/ordering.hpp"

namespace ordforge {

using TreeNode = std::vector<int>;  // path from the root, child indices

// A prefix-closed set of finite sequences over counts.
class FiniteTree {
 public:
  FiniteTree() = default;

  // Inserts the node and every prefix of it.
  void insert(const TreeNode& node);

  bool contains(const TreeNode& node) const;
  size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::set<TreeNode>& nodes() const { return nodes_; }

 private:
  std::set<TreeNode> nodes_;
};

// Kleene-Brouwer: a <KB b iff a properly extends b, or at the first index
// where they differ a's entry is smaller. Total on any tree's node set;
// the root is the KB-maximum.
Ord kb_compare(const FiniteTree& t, const TreeNode& a, const TreeNode& b);

// All nodes sorted ascending by kb_compare.
std::vector<TreeNode> kb_sort(const FiniteTree& t);

}  // namespace ordforge

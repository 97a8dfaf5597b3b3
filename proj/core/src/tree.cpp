#include "ordforge/tree.hpp"

#include <algorithm>

namespace ordforge {

void FiniteTree::insert(const TreeNode& node) {
  TreeNode prefix;
  nodes_.insert(prefix);
  for (int step : node) {
    prefix.push_back(step);
    nodes_.insert(prefix);
  }
}

bool FiniteTree::contains(const TreeNode& node) const {
  return nodes_.count(node) > 0;
}

Ord kb_compare(const FiniteTree& t, const TreeNode& a, const TreeNode& b) {
  if (!t.contains(a) || !t.contains(b))
    throw ValidationError("kb_compare: node not in tree");
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return Ord::Less;
    if (a[i] > b[i]) return Ord::Greater;
  }
  // one is a prefix of the other; the proper extension is smaller
  if (a.size() > b.size()) return Ord::Less;
  if (a.size() < b.size()) return Ord::Greater;
  return Ord::Equal;
}

std::vector<TreeNode> kb_sort(const FiniteTree& t) {
  std::vector<TreeNode> out(t.nodes().begin(), t.nodes().end());
  std::sort(out.begin(), out.end(), [&t](const TreeNode& a, const TreeNode& b) {
    return kb_compare(t, a, b) == Ord::Less;
  });
  return out;
}

}  // namespace ordforge

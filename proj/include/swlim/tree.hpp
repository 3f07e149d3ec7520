#pragma once
// Binary-tree decomposition of 132-avoiders, the node map g, the removal
// multiset S', and its inverse reconstruction.

#include <memory>
#include <vector>

#include "swlim/perm.hpp"

namespace swlim {

struct TreeNode {
  std::unique_ptr<TreeNode> left, right;
};
using TreePtr = std::unique_ptr<TreeNode>;

int tree_size(const TreeNode* t);

// Classical decomposition: split on the maximum; everything left of the max
// is larger than everything right of it (132-avoidance). Throws on non-avoiders.
TreePtr perm_to_tree(const Perm& p);
Perm tree_to_perm(const TreeNode* t);

// g(v): walking root -> v, add |right subtree of w| + 1 each time the path
// steps from w to its left child. Preorder (node, left, right) listing.
std::vector<int> g_values(const TreeNode* t);

// S' = sorted multiset of g over all n nodes. (The zero removed from the raw
// edge multiset S is the front-insertion's, which has no node.)
std::vector<int> multiset_g(const TreeNode* t);

// Unique 132-avoider with the given multiset; throws std::invalid_argument
// ("not realisable") when no tree matches.
Perm reconstruct_from_multiset(const std::vector<int>& s_prime);

}  // namespace swlim

#include "swlim/tree.hpp"

#include <algorithm>

namespace swlim {

int tree_size(const TreeNode* t) {
  if (!t) return 0;
  return 1 + tree_size(t->left.get()) + tree_size(t->right.get());
}

namespace {

TreePtr build(const Perm& p, int lo, int hi) {
  if (lo >= hi) return nullptr;
  int mi = lo;
  for (int i = lo + 1; i < hi; ++i)
    if (p[i] > p[mi]) mi = i;
  auto node = std::make_unique<TreeNode>();
  node->left = build(p, lo, mi);
  node->right = build(p, mi + 1, hi);
  return node;
}

void emit(const TreeNode* t, std::vector<int>& vals, int lo, int hi, std::vector<int>& out) {
  // values available are vals[lo..hi); max goes to the split; the left
  // subtree takes the largest remaining block, the right the smallest.
  if (!t) return;
  int ls = tree_size(t->left.get());
  int maxv = vals[hi - 1];
  emit(t->left.get(), vals, hi - 1 - ls, hi - 1, out);
  out.push_back(maxv);
  emit(t->right.get(), vals, lo, hi - 1 - ls, out);
}

void gwalk(const TreeNode* t, int tally, std::vector<int>& out) {
  if (!t) return;
  out.push_back(tally);
  gwalk(t->left.get(), tally + tree_size(t->right.get()) + 1, out);
  gwalk(t->right.get(), tally, out);
}

}  // namespace

TreePtr perm_to_tree(const Perm& p) {
  if (contains(p, Perm{1, 3, 2}))
    throw std::invalid_argument("perm_to_tree: permutation contains 132");
  return build(p, 0, (int)p.size());
}

Perm tree_to_perm(const TreeNode* t) {
  int n = tree_size(t);
  std::vector<int> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = i + 1;
  Perm out;
  out.reserve(n);
  emit(t, vals, 0, n, out);
  return out;
}

std::vector<int> g_values(const TreeNode* t) {
  std::vector<int> out;
  gwalk(t, 0, out);
  return out;
}

std::vector<int> multiset_g(const TreeNode* t) {
  auto v = g_values(t);
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

struct BNode {
  int g = 0;
  BNode* parent = nullptr;
  std::unique_ptr<BNode> left, right;
};

int bsize(const BNode* n) {
  if (!n) return 0;
  return 1 + bsize(n->left.get()) + bsize(n->right.get());
}

TreePtr strip(const BNode* n) {
  if (!n) return nullptr;
  auto t = std::make_unique<TreeNode>();
  t->left = strip(n->left.get());
  t->right = strip(n->right.get());
  return t;
}

}  // namespace

Perm reconstruct_from_multiset(const std::vector<int>& s_prime) {
  if (s_prime.empty()) return Perm{};
  std::vector<int> s = s_prime;
  std::sort(s.begin(), s.end());
  if (s[0] != 0) throw std::invalid_argument("reconstruct: not realisable (no root zero)");
  // Nodes arrive in reverse preorder with nondecreasing g; each new node is
  // the right child of the previous one or the left child of an ancestor.
  auto root = std::make_unique<BNode>();
  BNode* prev = root.get();
  for (size_t i = 1; i < s.size(); ++i) {
    int want = s[i];
    BNode* host = nullptr;
    bool as_left = false;
    int matches = 0;
    if (!prev->right) {
      if (prev->g == want) { host = prev; as_left = false; ++matches; }
    }
    for (BNode* a = prev; a; a = a->parent) {
      if (!a->left) {
        // right subtree of a is complete by reverse-preorder time
        int gv = a->g + bsize(a->right.get()) + 1;
        if (gv == want) { host = a; as_left = true; ++matches; }
      }
    }
    if (matches != 1)
      throw std::invalid_argument("reconstruct: not realisable (" + std::to_string(matches) +
                                  " slots for value " + std::to_string(want) + ")");
    auto nn = std::make_unique<BNode>();
    nn->parent = host;
    if (as_left) {
      nn->g = host->g + bsize(host->right.get()) + 1;
      host->left = std::move(nn);
      prev = host->left.get();
    } else {
      nn->g = host->g;
      host->right = std::move(nn);
      prev = host->right.get();
    }
  }
  TreePtr t = strip(root.get());
  return tree_to_perm(t.get());
}

}  // namespace swlim

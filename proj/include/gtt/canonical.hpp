#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gtt/tree.hpp"

namespace gtt {

// Tree center(s) by iterative leaf peeling: one vertex, or two adjacent ones.
inline std::vector<int> tree_centers(const Tree& t) {
  int n = t.size();
  if (n == 1) return {0};
  if (n == 2) return {0, 1};
  std::vector<int> degree(n), layer, next;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    next.clear();
    for (int v : layer) {
      for (int w : t.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
      degree[v] = 0;
    }
    layer.swap(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace detail {

// AHU codes of all vertices for the tree rooted at `root`, via iterative
// post-order: code(v) = "(" + concat(sorted child codes) + ")".
inline std::vector<std::string> rooted_codes(const Tree& t, int root) {
  int n = t.size();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<const std::string*> kids;
    for (int w : t.neighbors(v))
      if (w != parent[v]) kids.push_back(&code[w]);
    std::sort(kids.begin(), kids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& c = code[v];
    c.reserve(2 + 2 * kids.size());
    c.push_back('(');
    for (const std::string* k : kids) c += *k;
    c.push_back(')');
  }
  return code;
}

}  // namespace detail

// Isomorphism-invariant byte string plus a relabeling onto the canonical
// representative: to_canonical[v] is v's index in the canonically labeled
// tree. Equal codes iff the free trees are isomorphic, and isomorphic trees
// map onto the identical labeled representative.
struct CanonicalForm {
  std::string code;
  std::vector<int> to_canonical;
};

inline CanonicalForm canonical_form(const Tree& t) {
  auto centers = tree_centers(t);
  int root = centers[0];
  std::vector<std::string> codes = detail::rooted_codes(t, root);
  if (centers.size() == 2) {
    auto other = detail::rooted_codes(t, centers[1]);
    if (other[centers[1]] < codes[root]) {
      root = centers[1];
      codes = std::move(other);
    }
  }
  // Preorder of the canonical rooted tree; children ascending by code.
  // Equal-code siblings are interchangeable (automorphic), so the labeled
  // representative does not depend on the input labeling.
  std::vector<int> to_canonical(t.size(), -1);
  std::vector<int> stack{root};
  std::vector<int> parent(t.size(), -1);
  parent[root] = root;
  int next = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    to_canonical[v] = next++;
    std::vector<int> kids;
    for (int w : t.neighbors(v))
      if (parent[w] == -1) {
        parent[w] = v;
        kids.push_back(w);
      }
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      if (codes[a] != codes[b]) return codes[a] < codes[b];
      return a < b;
    });
    // push in reverse so the smallest-code child is visited first
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return CanonicalForm{codes[root], std::move(to_canonical)};
}

inline std::string canonical_code(const Tree& t) { return canonical_form(t).code; }

}  // namespace gtt

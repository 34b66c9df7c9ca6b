#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "gtt/errors.hpp"

namespace gtt {

// An immutable tree on dense vertex indices 0..n-1. Construction validates
// tree-ness; after that the structure never changes, so values are safe to
// share across threads.
class Tree {
 public:
  static Tree from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw_error(Errc::not_a_tree, "vertex count must be at least 1");
    if (static_cast<int>(edges.size()) != n - 1) {
      throw_error(Errc::not_a_tree,
                  "expected " + std::to_string(n - 1) + " edges for " +
                      std::to_string(n) + " vertices, got " +
                      std::to_string(edges.size()));
    }
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw_error(Errc::index_out_of_range,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for n=" + std::to_string(n));
      }
      if (u == v) {
        throw_error(Errc::not_a_tree, "self-loop at vertex " + std::to_string(u));
      }
      norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end()) {
      throw_error(Errc::not_a_tree, "duplicate edge");
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : norm) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    // n-1 edges, no duplicates: connected iff acyclic iff tree.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) {
      throw_error(Errc::not_a_tree, "graph is not connected (or contains a cycle)");
    }
    return Tree(n, std::move(adj), std::move(norm));
  }

  int size() const { return n_; }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }
  // Edges normalized to u<v and sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw_error(Errc::index_out_of_range,
                  "vertex " + std::to_string(v) + " out of range for n=" +
                      std::to_string(n_));
    }
  }

 private:
  Tree(int n, std::vector<std::vector<int>> adj, std::vector<std::pair<int, int>> edges)
      : n_(n), adj_(std::move(adj)), edges_(std::move(edges)) {}

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Subset of 0..capacity-1 with constant-time membership.
class VertexSet {
 public:
  explicit VertexSet(int capacity) : capacity_(capacity), bits_(capacity, false), count_(0) {
    if (capacity < 0) throw_error(Errc::index_out_of_range, "negative capacity");
  }
  VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity) {
    for (int v : members) insert(v);
  }
  static VertexSet of(int capacity, const std::vector<int>& members) {
    VertexSet s(capacity);
    for (int v : members) s.insert(v);
    return s;
  }

  int capacity() const { return capacity_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int v) const {
    check(v);
    return bits_[v];
  }
  void insert(int v) {
    check(v);
    if (!bits_[v]) {
      bits_[v] = true;
      ++count_;
    }
  }
  void erase(int v) {
    check(v);
    if (bits_[v]) {
      bits_[v] = false;
      --count_;
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < capacity_; ++v)
      if (bits_[v]) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.capacity_ == b.capacity_ && a.bits_ == b.bits_;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= capacity_) {
      throw_error(Errc::index_out_of_range,
                  "vertex " + std::to_string(v) + " out of range for capacity " +
                      std::to_string(capacity_));
    }
  }

  int capacity_;
  std::vector<bool> bits_;
  int count_;
};

// A simple path given as its vertex sequence; consecutive entries adjacent.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

inline Tree path_tree(int n) {
  if (n < 1) throw_error(Errc::not_a_tree, "path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edge_list(n, edges);
}

inline Tree star_tree(int n) {
  if (n < 2) throw_error(Errc::not_a_tree, "star needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Tree::from_edge_list(n, edges);
}

// End vertices (degree 1). The single vertex of K1 has degree 0, so
// leaves(K1) is empty.
inline VertexSet leaves(const Tree& t) {
  VertexSet out(t.size());
  if (t.size() < 2) return out;
  for (int v = 0; v < t.size(); ++v)
    if (t.degree(v) == 1) out.insert(v);
  return out;
}

inline VertexSet supports(const Tree& t) {
  VertexSet out(t.size());
  if (t.size() < 2) return out;
  for (int v = 0; v < t.size(); ++v) {
    for (int w : t.neighbors(v)) {
      if (t.degree(w) == 1) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

inline VertexSet strong_supports(const Tree& t) {
  VertexSet out(t.size());
  if (t.size() < 2) return out;
  for (int v = 0; v < t.size(); ++v) {
    int leaf_neighbors = 0;
    for (int w : t.neighbors(v))
      if (t.degree(w) == 1) ++leaf_neighbors;
    if (leaf_neighbors >= 2) out.insert(v);
  }
  return out;
}

// Vertices at distance exactly two from some end vertex. A leaf x with
// support y reaches exactly N(y)\{x} at distance two.
inline VertexSet two_supports(const Tree& t) {
  VertexSet out(t.size());
  if (t.size() < 2) return out;
  for (int x = 0; x < t.size(); ++x) {
    if (t.degree(x) != 1) continue;
    int y = t.neighbors(x)[0];
    for (int w : t.neighbors(y))
      if (w != x) out.insert(w);
  }
  return out;
}

// pn(u,S) = { x : N(x) ∩ S = {u} }. Members of S may themselves be private
// neighbors of u.
inline VertexSet private_neighbors(const Tree& t, int u, const VertexSet& S) {
  t.check_vertex(u);
  if (!S.contains(u)) {
    throw_error(Errc::not_in_set, "vertex " + std::to_string(u) + " is not in S");
  }
  VertexSet out(t.size());
  for (int x = 0; x < t.size(); ++x) {
    int hits = 0;
    bool only_u = true;
    for (int w : t.neighbors(x)) {
      if (S.contains(w)) {
        ++hits;
        if (w != u) only_u = false;
      }
    }
    if (hits == 1 && only_u) out.insert(x);
  }
  return out;
}

inline std::vector<int> bfs_distances(const Tree& t, int src) {
  t.check_vertex(src);
  std::vector<int> dist(t.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

namespace detail {

struct BfsFar {
  int far;
  std::vector<int> parent;
};

// Farthest vertex from src, ties toward lower index; parents follow FIFO
// order with ascending neighbor scan, so the walk is fully deterministic.
inline BfsFar bfs_farthest(const Tree& t, int src) {
  std::vector<int> dist(t.size(), -1), parent(t.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  int far = src;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        if (dist[w] > dist[far]) far = w;
        q.push(w);
      }
    }
  }
  return {far, std::move(parent)};
}

}  // namespace detail

// Deterministic diameter path: double BFS from vertex 0, ties broken toward
// lower vertex index throughout.
inline Path longest_path(const Tree& t) {
  if (t.size() == 1) return Path{{0}};
  auto first = detail::bfs_farthest(t, 0);
  auto second = detail::bfs_farthest(t, first.far);
  std::vector<int> verts;
  for (int v = second.far; v != -1; v = second.parent[v]) verts.push_back(v);
  std::reverse(verts.begin(), verts.end());  // now runs first.far -> second.far
  return Path{std::move(verts)};
}

// Induced subtree after deleting `removed`; also yields the old->new index
// map (-1 for removed vertices). Throws NotATree if the remainder is
// disconnected.
struct RemovalResult {
  Tree tree;
  std::vector<int> old_to_new;
};

inline RemovalResult remove_vertices(const Tree& t, const std::vector<int>& removed) {
  std::vector<char> gone(t.size(), 0);
  for (int v : removed) {
    t.check_vertex(v);
    gone[v] = 1;
  }
  std::vector<int> old_to_new(t.size(), -1);
  int next = 0;
  for (int v = 0; v < t.size(); ++v)
    if (!gone[v]) old_to_new[v] = next++;
  if (next == 0) throw_error(Errc::not_a_tree, "cannot remove all vertices");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : t.edges())
    if (!gone[u] && !gone[v]) edges.emplace_back(old_to_new[u], old_to_new[v]);
  return RemovalResult{Tree::from_edge_list(next, edges), std::move(old_to_new)};
}

}  // namespace gtt

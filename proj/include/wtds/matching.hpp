#pragma once

// Maximum-cardinality matching in general graphs (Edmonds' blossom
// algorithm, O(V^3)) together with the Edmonds-Gallai classification that the
// flower module uses to extract small cycle covers.

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace wtds {

/// Simple undirected graph on dense indices 0..n-1.
class IndexGraph {
 public:
  explicit IndexGraph(int n = 0) : adj_(static_cast<std::size_t>(n)) {}

  int size() const { return static_cast<int>(adj_.size()); }

  int add_vertex() {
    adj_.emplace_back();
    return size() - 1;
  }

  /// Parallel insertions and self-loops are ignored.
  void add_edge(int u, int v) {
    if (u == v) return;
    auto& a = adj_[static_cast<std::size_t>(u)];
    if (std::find(a.begin(), a.end(), v) != a.end()) return;
    a.push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }

  /// Sorts adjacency lists so that searches are order-deterministic.
  void finalize() {
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<std::vector<int>> adj_;
};

class BlossomMatcher {
 public:
  static constexpr int kNone = -1;

  explicit BlossomMatcher(const IndexGraph& g)
      : g_(g), n_(g.size()), match_(static_cast<std::size_t>(n_), kNone) {}

  /// Grows the current matching to maximum cardinality.
  void solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != kNone) continue;
      int end = find_augmenting_path(v);
      if (end != kNone) augment(end);
    }
  }

  int mate(int v) const { return match_[idx(v)]; }
  const std::vector<int>& mates() const { return match_; }

  int size() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[idx(v)] > v) ++c;
    return c;
  }

  std::vector<std::pair<int, int>> matched_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
      if (match_[idx(v)] > v) out.emplace_back(v, match_[idx(v)]);
    return out;
  }

  /// Vertices missed by at least one maximum matching (the set D of the
  /// Edmonds-Gallai decomposition). Requires solve() to have run.
  std::vector<bool> missable_vertices() {
    std::vector<bool> d(static_cast<std::size_t>(n_), false);
    const std::vector<int> saved = match_;
    for (int v = 0; v < n_; ++v) {
      if (saved[idx(v)] == kNone) {
        d[idx(v)] = true;
        continue;
      }
      // Drop v and its matching edge; an augmenting path from the freed mate
      // exists iff G - v still has a matching of the same size.
      int u = saved[idx(v)];
      match_ = saved;
      match_[idx(v)] = kNone;
      match_[idx(u)] = kNone;
      blocked_.assign(static_cast<std::size_t>(n_), false);
      blocked_[idx(v)] = true;
      d[idx(v)] = find_augmenting_path(u) != kNone;
    }
    match_ = saved;
    blocked_.clear();
    return d;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  bool is_blocked(int v) const { return !blocked_.empty() && blocked_[idx(v)]; }

  int lca(int a, int b) {
    std::vector<bool> seen(idx(n_), false);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (match_[idx(a)] == kNone) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = true;
      in_blossom_[idx(base_[idx(match_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  // Breadth-first alternating search from an exposed root, shrinking
  // blossoms on the fly. Returns the exposed endpoint of an augmenting path.
  int find_augmenting_path(int root) {
    used_.assign(idx(n_), false);
    parent_.assign(idx(n_), kNone);
    base_.resize(idx(n_));
    for (int i = 0; i < n_; ++i) base_[idx(i)] = i;

    used_[idx(root)] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (is_blocked(to)) continue;
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != kNone && parent_[idx(match_[idx(to)])] != kNone)) {
          int cur = lca(v, to);
          in_blossom_.assign(idx(n_), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] == kNone) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == kNone) return to;
          int next = match_[idx(to)];
          used_[idx(next)] = true;
          q.push(next);
        }
      }
    }
    return kNone;
  }

  void augment(int v) {
    while (v != kNone) {
      int pv = parent_[idx(v)];
      int ppv = match_[idx(pv)];
      match_[idx(v)] = pv;
      match_[idx(pv)] = v;
      v = ppv;
    }
  }

  const IndexGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
  std::vector<bool> blocked_;
};

/// Maximum-cardinality matching of the underlying simple graph, as edges with
/// u < v sorted by u.
inline std::vector<Edge> max_matching(const MultiGraph& g) {
  const auto verts = g.vertices();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  IndexGraph ig(static_cast<int>(verts.size()));
  for (const Edge& e : g.edges()) ig.add_edge(index[e.u], index[e.v]);
  ig.finalize();
  BlossomMatcher m(ig);
  m.solve();
  std::vector<Edge> out;
  for (auto [a, b] : m.matched_pairs())
    out.push_back({verts[static_cast<std::size_t>(a)], verts[static_cast<std::size_t>(b)], 1});
  return out;
}

}  // namespace wtds

#pragma once

// For a vertex x: either a set of cycles pairwise meeting exactly in x (an
// x-flower) of order at least k+1, or a set Z, |Z| <= 2k, x not in Z, meeting
// every cycle through x.
//
// Cycles through x are A-paths in the graph obtained by subdividing every
// edge at x and deleting x, where A holds the subdivision vertices
// ("terminals"). Disjoint A-paths are packed through Gallai's auxiliary graph:
// two copies of the subdivided graph glued along A, plus an edge joining the
// two copies of every non-terminal. A matching there has size
// (#non-terminals + #paths). The cover is read off the Edmonds-Gallai barrier
// of that auxiliary graph, which is symmetric under swapping the two copies.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "matching.hpp"

namespace wtds {

/// A cycle through x listed from x; a 2-cycle (double edge) is {x, y}.
using Cycle = std::vector<VertexId>;

struct FlowerOrCover {
  std::vector<Cycle> flower;  // non-empty iff the flower branch was taken
  VertexSet cover;

  bool is_flower() const { return !flower.empty(); }
};

/// True iff x lies on no cycle: every component of g - x has at most one
/// edge (counted with multiplicity) to x.
inline bool avoids_cycles_through(const MultiGraph& g, VertexId x) {
  MultiGraph rest = g;
  rest.remove_vertex(x);
  for (const auto& comp : connected_components(rest)) {
    int edges = 0;
    for (VertexId v : comp) edges += g.multiplicity(x, v);
    if (edges > 1) return false;
  }
  return true;
}

namespace detail {

// Index layout of the auxiliary graph: [0, n) originals, [n, 2n) copies,
// [2n, 2n + t) terminals.
struct GallaiGraph {
  std::vector<VertexId> plain;          // non-terminal index -> vertex of g
  std::vector<VertexId> terminal_nbr;   // terminal index -> its neighbor in g
  IndexGraph aux;

  int n() const { return static_cast<int>(plain.size()); }
  int t() const { return static_cast<int>(terminal_nbr.size()); }
  int copy_of(int v) const { return v + n(); }
  int terminal(int i) const { return 2 * n() + i; }
  bool is_terminal(int a) const { return a >= 2 * n(); }
  int plain_index(int a) const { return a >= n() ? a - n() : a; }
};

inline GallaiGraph build_gallai_graph(const MultiGraph& g, VertexId x) {
  GallaiGraph gg;
  std::map<VertexId, int> index;
  for (VertexId v : g.vertices()) {
    if (v == x) continue;
    index[v] = static_cast<int>(gg.plain.size());
    gg.plain.push_back(v);
  }
  for (const auto& [y, m] : g.incident(x))
    for (int i = 0; i < m; ++i) gg.terminal_nbr.push_back(y);

  const int n = gg.n();
  gg.aux = IndexGraph(2 * n + gg.t());
  for (int v = 0; v < n; ++v) gg.aux.add_edge(v, v + n);
  for (const Edge& e : g.edges()) {
    if (e.u == x || e.v == x) continue;
    int a = index[e.u], b = index[e.v];
    gg.aux.add_edge(a, b);
    gg.aux.add_edge(a + n, b + n);
  }
  for (int i = 0; i < gg.t(); ++i) {
    int y = index[gg.terminal_nbr[static_cast<std::size_t>(i)]];
    gg.aux.add_edge(gg.terminal(i), y);
    gg.aux.add_edge(gg.terminal(i), y + n);
  }
  gg.aux.finalize();
  return gg;
}

// Walks the components of (M xor {v v'}) that start at matched terminals and
// returns the ones that end at another terminal, projected onto g.
inline std::vector<Cycle> extract_flower(const GallaiGraph& gg, const BlossomMatcher& m,
                                         VertexId x) {
  std::vector<Cycle> cycles;
  std::vector<bool> done(static_cast<std::size_t>(gg.t()), false);
  for (int i = 0; i < gg.t(); ++i) {
    if (done[static_cast<std::size_t>(i)]) continue;
    int a = gg.terminal(i);
    if (m.mate(a) == BlossomMatcher::kNone) continue;
    done[static_cast<std::size_t>(i)] = true;
    Cycle cyc{x};
    int cur = m.mate(a);
    bool closed = false;
    for (;;) {
      if (gg.is_terminal(cur)) {
        done[static_cast<std::size_t>(cur - 2 * gg.n())] = true;
        closed = true;
        break;
      }
      int p = gg.plain_index(cur);
      cyc.push_back(gg.plain[static_cast<std::size_t>(p)]);
      int twin = cur < gg.n() ? gg.copy_of(p) : p;
      int next = m.mate(twin);
      if (next == BlossomMatcher::kNone) break;
      cur = next;
    }
    if (closed) cycles.push_back(std::move(cyc));
  }
  return cycles;
}

inline VertexSet extract_cover(const GallaiGraph& gg, BlossomMatcher& m) {
  const auto missable = m.missable_vertices();
  const int total = gg.aux.size();
  std::vector<bool> barrier(static_cast<std::size_t>(total), false);
  for (int a = 0; a < total; ++a) {
    if (missable[static_cast<std::size_t>(a)]) continue;
    for (int b : gg.aux.neighbors(a))
      if (missable[static_cast<std::size_t>(b)]) barrier[static_cast<std::size_t>(a)] = true;
  }

  VertexSet cover;
  const int n = gg.n();
  // A barrier terminal is cut off by deleting its unique neighbor.
  std::vector<bool> removed(static_cast<std::size_t>(n + gg.t()), false);
  for (int v = 0; v < n; ++v) {
    if (barrier[static_cast<std::size_t>(v)] || barrier[static_cast<std::size_t>(v + n)]) {
      removed[static_cast<std::size_t>(v)] = true;
      cover.insert(gg.plain[static_cast<std::size_t>(v)]);
    }
  }
  for (int i = 0; i < gg.t(); ++i) {
    if (barrier[static_cast<std::size_t>(gg.terminal(i))]) {
      removed[static_cast<std::size_t>(n + i)] = true;
      cover.insert(gg.terminal_nbr[static_cast<std::size_t>(i)]);
    }
  }

  // Components of the subdivided graph minus the barrier (original side only;
  // terminals indexed n + i).
  std::vector<int> comp(static_cast<std::size_t>(n + gg.t()), -1);
  int ncomp = 0;
  auto local_neighbors = [&](int a) {
    std::vector<int> out;
    int aux_id = a < n ? a : gg.terminal(a - n);
    for (int b : gg.aux.neighbors(aux_id)) {
      if (b >= n && b < 2 * n) continue;  // copies
      out.push_back(b < n ? b : n + (b - 2 * n));
    }
    return out;
  };
  for (int s = 0; s < n + gg.t(); ++s) {
    if (removed[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : local_neighbors(a)) {
        if (removed[static_cast<std::size_t>(b)] || comp[static_cast<std::size_t>(b)] != -1) continue;
        comp[static_cast<std::size_t>(b)] = ncomp;
        stack.push_back(b);
      }
    }
    ++ncomp;
  }

  // Per component, group surviving terminals by their neighbor. Keep at most
  // one single-terminal group alive; delete the neighbor of every other group.
  std::vector<std::map<VertexId, int>> groups(static_cast<std::size_t>(ncomp));
  for (int i = 0; i < gg.t(); ++i) {
    int c = comp[static_cast<std::size_t>(n + i)];
    if (c < 0) continue;
    groups[static_cast<std::size_t>(c)][gg.terminal_nbr[static_cast<std::size_t>(i)]]++;
  }
  for (const auto& grp : groups) {
    bool kept_one = false;
    for (const auto& [y, count] : grp) {
      if (count == 1 && !kept_one) {
        kept_one = true;
        continue;
      }
      cover.insert(y);
    }
  }
  return cover;
}

}  // namespace detail

/// Either an x-flower of order >= k+1 or a validated cover of size <= 2k.
/// Throws InvariantViolation if the extracted cover fails validation.
inline FlowerOrCover flower_or_cover(const MultiGraph& g, VertexId x, std::int64_t k) {
  if (!g.contains(x)) throw std::invalid_argument("unknown vertex " + to_string(x));
  if (k < 0) throw std::invalid_argument("flower_or_cover needs k >= 0");

  auto gg = detail::build_gallai_graph(g, x);
  BlossomMatcher m(gg.aux);
  m.solve();
  const std::int64_t packing = m.size() - gg.n();

  FlowerOrCover out;
  if (packing >= k + 1) {
    out.flower = detail::extract_flower(gg, m, x);
    if (static_cast<std::int64_t>(out.flower.size()) < k + 1)
      throw InvariantViolation("flower extraction returned fewer paths than the matching certifies");
    return out;
  }

  out.cover = detail::extract_cover(gg, m);
  if (static_cast<std::int64_t>(out.cover.size()) > 2 * k)
    throw InvariantViolation("cycle cover at vertex " + to_string(x) + " has size " +
                             std::to_string(out.cover.size()) + " > 2k");
  MultiGraph rest = delete_vertices(g, out.cover);
  if (!avoids_cycles_through(rest, x))
    throw InvariantViolation("cycle cover at vertex " + to_string(x) + " misses a cycle");
  return out;
}

/// Size of a maximum x-flower, via the same matching.
inline int max_flower_order(const MultiGraph& g, VertexId x) {
  auto gg = detail::build_gallai_graph(g, x);
  BlossomMatcher m(gg.aux);
  m.solve();
  return m.size() - gg.n();
}

}  // namespace wtds

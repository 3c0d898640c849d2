#pragma once

// Exhaustive reference solvers over vertex bitmasks. They refuse instances
// above their size limit instead of guessing.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "reductions.hpp"

namespace wtds {

class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleAnswer {
  Decision decision = Decision::No;
  std::optional<Solution> witness;
  std::optional<Weight> optimum_weight;
};

namespace detail {

// Dense copy of a multigraph: index i <-> ids[i].
struct MaskGraph {
  std::vector<VertexId> ids;
  std::vector<std::uint32_t> adj;         // neighbor masks
  std::vector<std::vector<int>> mult;

  explicit MaskGraph(const MultiGraph& g) : ids(g.vertices()) {
    const std::size_t n = ids.size();
    adj.assign(n, 0);
    mult.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mult[i][j] = g.multiplicity(ids[i], ids[j]);
        if (mult[i][j]) adj[i] |= 1u << j;
      }
  }

  int n() const { return static_cast<int>(ids.size()); }
  std::uint32_t all() const { return n() == 32 ? ~0u : (1u << n()) - 1; }

  bool connected(std::uint32_t keep) const {
    if (!keep) return false;
    std::uint32_t seen = keep & (~keep + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= keep & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == keep;
  }

  int edges_within(std::uint32_t keep) const {
    int e = 0;
    for (std::uint32_t a = keep; a; a &= a - 1) {
      const int i = std::countr_zero(a);
      for (std::uint32_t b = adj[i] & keep & ~((2u << i) - 1); b; b &= b - 1) e += mult[i][std::countr_zero(b)];
    }
    return e;
  }

  bool is_tree(std::uint32_t keep) const {
    return keep && edges_within(keep) == std::popcount(keep) - 1 && connected(keep);
  }

  // Acyclic iff every component has |E| = |V| - 1.
  bool is_forest(std::uint32_t keep) const {
    std::uint32_t left = keep;
    while (left) {
      std::uint32_t comp = left & (~left + 1), frontier = comp;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= left & ~comp;
        comp |= next;
        frontier = next;
      }
      if (edges_within(comp) != std::popcount(comp) - 1) return false;
      left &= ~comp;
    }
    return true;
  }

  VertexSet to_set(std::uint32_t mask) const {
    VertexSet s;
    for (; mask; mask &= mask - 1) s.insert(ids[std::countr_zero(mask)]);
    return s;
  }

  int index_of(VertexId v) const {
    for (int i = 0; i < n(); ++i)
      if (ids[i] == v) return i;
    throw std::invalid_argument("unknown vertex " + to_string(v));
  }
};

inline void check_limit(std::size_t n, int limit, const char* what) {
  if (limit > 30) throw std::invalid_argument("oracle limit above 30 is not supported");
  if (static_cast<long>(n) > limit)
    throw OracleLimitExceeded(std::string(what) + ": " + std::to_string(n) + " vertices exceeds limit " +
                              std::to_string(limit));
}

// Ascending sorted index lists compare like the sorted id lists they denote.
inline bool lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

// Vertex sets (as masks, x excluded) of all cycles through x.
inline std::vector<std::uint32_t> cycle_masks_through(const MaskGraph& mg, int x) {
  const int n = mg.n();
  std::vector<std::uint32_t> found;
  std::vector<char> is_cycle(std::size_t{1} << n, 0);
  for (int y = 0; y < n; ++y)
    if (mg.mult[x][y] == 2) is_cycle[1u << y] = 1;

  // reach[S] = endpoints v such that a simple path from `start` covers exactly S.
  std::vector<std::uint32_t> reach(std::size_t{1} << n);
  const std::uint32_t xbit = 1u << x;
  for (int start = 0; start < n; ++start) {
    if (!(mg.adj[x] >> start & 1)) continue;
    std::fill(reach.begin(), reach.end(), 0u);
    reach[1u << start] = 1u << start;
    for (std::uint32_t s = 1; s < reach.size(); ++s) {
      if (!reach[s]) continue;
      for (std::uint32_t ends = reach[s]; ends; ends &= ends - 1) {
        const int v = std::countr_zero(ends);
        if (v != start && (mg.adj[x] >> v & 1)) is_cycle[s] = 1;
        for (std::uint32_t nb = mg.adj[v] & ~s & ~xbit; nb; nb &= nb - 1) {
          const int u = std::countr_zero(nb);
          reach[s | (1u << u)] |= 1u << u;
        }
      }
    }
  }
  for (std::uint32_t s = 1; s < is_cycle.size(); ++s)
    if (is_cycle[s]) found.push_back(s);
  return found;
}

}  // namespace detail

/// Minimum-weight tree deletion set of weight <= k, ties broken by the
/// lexicographically smallest sorted id list. Default limit: 15 vertices.
inline OracleAnswer exact_tds(const Instance& inst, int limit = 15) {
  inst.validate();
  detail::check_limit(inst.graph.vertex_count(), limit, "exact_tds");
  OracleAnswer ans;
  if (inst.k < 0) return ans;
  const detail::MaskGraph mg(inst.graph);
  std::vector<Weight> w(mg.n());
  for (int i = 0; i < mg.n(); ++i) w[i] = inst.weight.at(mg.ids[i]);

  std::optional<std::uint32_t> best;
  Weight best_w = 0;
  for (std::uint32_t del = 0; del <= mg.all(); ++del) {
    Weight total = 0;
    for (std::uint32_t d = del; d; d &= d - 1) total += w[std::countr_zero(d)];
    if (total > inst.k) continue;
    if (best && (total > best_w || (total == best_w && !detail::lex_less(del, *best)))) continue;
    if (!mg.is_tree(mg.all() & ~del)) continue;
    best = del;
    best_w = total;
    if (del == mg.all()) break;
  }
  if (!best) return ans;

  Solution sol{mg.to_set(*best)};
  if (!is_tree_deletion_set(inst.graph, sol.deleted) || inst.weight_of(sol.deleted) > inst.k)
    throw InvariantViolation("exact_tds produced an invalid witness");
  ans.decision = Decision::Yes;
  ans.witness = std::move(sol);
  ans.optimum_weight = best_w;
  return ans;
}

/// Size of a minimum feedback vertex set.
inline int exact_fvs(const MultiGraph& g, int limit = 15) {
  detail::check_limit(g.vertex_count(), limit, "exact_fvs");
  const detail::MaskGraph mg(g);
  int best = mg.n();
  for (std::uint32_t del = 0; del <= mg.all(); ++del) {
    const int size = std::popcount(del);
    if (size < best && mg.is_forest(mg.all() & ~del)) best = size;
    if (del == mg.all()) break;
  }
  return best;
}

/// Largest number of cycles through x that pairwise share only x.
inline int exact_flower(const MultiGraph& g, VertexId x, int limit = 12) {
  detail::check_limit(g.vertex_count(), limit, "exact_flower");
  const detail::MaskGraph mg(g);
  const int xi = mg.index_of(x);
  const auto cycles = detail::cycle_masks_through(mg, xi);

  // best[U] = maximum packing using only vertices of U.
  const std::uint32_t full = mg.all() & ~(1u << xi);
  std::vector<int> best(std::size_t{full} + 1, 0);
  for (std::uint32_t u = 1; u <= full; ++u) {
    if (u & ~full) continue;
    const std::uint32_t low = u & (~u + 1);
    int b = best[u & ~low];
    for (std::uint32_t c : cycles)
      if ((c & low) && (c & ~u) == 0) b = std::max(b, 1 + best[u & ~c]);
    best[u] = b;
  }
  return best[full];
}

/// A smallest set Z (x not in Z) meeting every cycle through x; ties broken
/// lexicographically.
inline VertexSet exact_cycle_cover(const MultiGraph& g, VertexId x, int limit = 12) {
  detail::check_limit(g.vertex_count(), limit, "exact_cycle_cover");
  const detail::MaskGraph mg(g);
  const int xi = mg.index_of(x);
  const auto cycles = detail::cycle_masks_through(mg, xi);
  const std::uint32_t full = mg.all() & ~(1u << xi);

  std::optional<std::uint32_t> best;
  for (std::uint32_t z = 0;; z = (z - full) & full) {  // subsets of full
    bool hits = true;
    for (std::uint32_t c : cycles)
      if (!(c & z)) {
        hits = false;
        break;
      }
    if (hits && (!best || std::popcount(z) < std::popcount(*best) ||
                 (std::popcount(z) == std::popcount(*best) && detail::lex_less(z, *best))))
      best = z;
    if (z == full) break;
  }
  return mg.to_set(*best);
}

}  // namespace wtds

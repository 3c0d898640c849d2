#pragma once

// Structural decomposition of a semi-reduced instance into C_m (the FVS F
// plus the LCA-closed cycle covers Q-hat), C_g (a forest of bounded size) and
// an independent set I whose neighborhoods are double cliques inside C_m.

#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "flower.hpp"
#include "fvs.hpp"
#include "graph.hpp"

namespace wtds {

// ---------------------------------------------------------------------------
// Rooted trees and LCA closure.

class RootedTree {
 public:
  /// Roots the tree `t` at `root` (parents assigned breadth-first).
  RootedTree(const MultiGraph& t, VertexId root) : root_(root) {
    if (!is_tree(t)) throw std::invalid_argument("RootedTree needs a tree");
    parent_[root] = root;
    depth_[root] = 0;
    std::vector<VertexId> order{root};
    for (std::size_t i = 0; i < order.size(); ++i)
      for (VertexId u : t.neighbors(order[i]))
        if (!parent_.count(u)) {
          parent_[u] = order[i];
          depth_[u] = depth_[order[i]] + 1;
          order.push_back(u);
        }
  }

  VertexId root() const { return root_; }
  VertexId parent(VertexId v) const { return parent_.at(v); }
  int depth(VertexId v) const { return depth_.at(v); }
  bool contains(VertexId v) const { return parent_.count(v) != 0; }

  VertexId lca(VertexId a, VertexId b) const {
    while (depth(a) > depth(b)) a = parent(a);
    while (depth(b) > depth(a)) b = parent(b);
    while (a != b) {
      a = parent(a);
      b = parent(b);
    }
    return a;
  }

 private:
  VertexId root_;
  std::map<VertexId, VertexId> parent_;
  std::map<VertexId, int> depth_;
};

/// Smallest superset of `marked` closed under pairwise least common ancestors.
inline VertexSet lca_closure(const RootedTree& tree, const VertexSet& marked) {
  VertexSet closed = marked;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<VertexId> cur(closed.begin(), closed.end());
    for (std::size_t i = 0; i < cur.size() && !grew; ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (closed.insert(tree.lca(cur[i], cur[j])).second) {
          grew = true;
          break;
        }
  }
  return closed;
}

/// Largest number of `closed` vertices adjacent to one component of
/// tree - closed.
inline std::size_t max_residual_neighbors(const MultiGraph& tree, const VertexSet& closed) {
  std::size_t worst = 0;
  for (const auto& comp : connected_components(delete_vertices(tree, closed))) {
    VertexSet nb = neighborhood(tree, VertexSet(comp.begin(), comp.end()));
    worst = std::max(worst, nb.size());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Scaffold: everything computed on G before it is modified.

struct Scaffold {
  VertexSet f;
  std::map<VertexId, VertexSet> cover_at;  // Q^x for x in F
  VertexSet q;
  VertexSet q_hat;
  VertexSet c_m;

  /// Components of G - C_m, ordered by minimum id.
  std::vector<VertexSet> components;
  /// Per component: number of Q-hat neighbors (0, 1 or 2).
  std::vector<int> component_class;
  /// Per component: its neighborhood, a subset of C_m.
  std::vector<VertexSet> component_nbrs;
  /// Pairs {y, y'} of C_m, not both in Q-hat, with the indices of the class
  /// 0/1 components adjacent to both. Pairs with c(y, y') = 0 are omitted.
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> pair_components;

  std::size_t c2_count() const {
    return static_cast<std::size_t>(std::count(component_class.begin(), component_class.end(), 2));
  }

  std::size_t pair_count(VertexId a, VertexId b) const {
    auto it = pair_components.find(std::minmax(a, b));
    return it == pair_components.end() ? 0 : it->second.size();
  }
};

/// Builds the scaffold, or nullopt when the FVS approximation already exceeds
/// 2k (no solution of weight <= k exists). Every bound is recorded in
/// `ledger`; a breach throws InvariantViolation.
inline std::optional<Scaffold> build_scaffold(const Instance& inst, BoundLedger& ledger) {
  const MultiGraph& g = inst.graph;
  const std::int64_t k = inst.k;
  Scaffold s;

  s.f = approx_fvs(g).fvs;
  if (static_cast<std::int64_t>(s.f.size()) > bound::fvs(k)) return std::nullopt;
  ledger.require("|F| <= 2k", static_cast<std::int64_t>(s.f.size()), bound::fvs(k));

  std::int64_t largest_cover = 0;
  for (VertexId x : s.f) {
    FlowerOrCover fc = flower_or_cover(g, x, k);
    if (fc.is_flower())
      throw InvariantViolation("vertex " + to_string(x) +
                               " carries a (k+1)-flower in a semi-reduced instance");
    largest_cover = std::max<std::int64_t>(largest_cover, static_cast<std::int64_t>(fc.cover.size()));
    s.q.insert(fc.cover.begin(), fc.cover.end());
    s.cover_at[x] = std::move(fc.cover);
  }
  ledger.require("max |Q^x| <= 2k", largest_cover, 2 * k);
  ledger.require("|Q| <= 4k^2", static_cast<std::int64_t>(s.q.size()), bound::q(k));

  // LCA closure of Q inside every tree of G - F, each rooted at its minimum id.
  const MultiGraph forest = delete_vertices(g, s.f);
  std::int64_t worst_closure_excess = std::numeric_limits<std::int64_t>::min();
  std::int64_t worst_closure_lhs = 0, worst_closure_rhs = 0;
  std::size_t worst_residual = 0;
  for (const auto& comp : connected_components(forest)) {
    const VertexSet members(comp.begin(), comp.end());
    const MultiGraph tree = induced_subgraph(forest, members);
    RootedTree rooted(tree, comp.front());
    VertexSet marked;
    for (VertexId v : comp)
      if (s.q.count(v)) marked.insert(v);
    VertexSet closed = lca_closure(rooted, marked);
    const auto lhs = static_cast<std::int64_t>(closed.size());
    const auto rhs = 2 * static_cast<std::int64_t>(marked.size());
    if (lhs - rhs > worst_closure_excess) {
      worst_closure_excess = lhs - rhs;
      worst_closure_lhs = lhs;
      worst_closure_rhs = rhs;
    }
    if (!closed.empty()) worst_residual = std::max(worst_residual, max_residual_neighbors(tree, closed));
    s.q_hat.insert(closed.begin(), closed.end());
  }
  ledger.require("LCA closure |M'| <= 2|M| (worst tree)", worst_closure_lhs, worst_closure_rhs);
  ledger.require("LCA closure residual neighbors <= 2", static_cast<std::int64_t>(worst_residual), 2);
  ledger.require("|Qhat| <= 8k^2", static_cast<std::int64_t>(s.q_hat.size()), bound::q_hat(k));

  s.c_m = s.q_hat;
  s.c_m.insert(s.f.begin(), s.f.end());
  ledger.require("|C_m| <= 8k^2+2k", static_cast<std::int64_t>(s.c_m.size()), bound::c_m(k));

  // Components of G - C_m and their classification.
  std::int64_t worst_claim1 = 0;
  std::int64_t largest_component = 0;
  for (const auto& comp : connected_components(delete_vertices(g, s.c_m))) {
    VertexSet members(comp.begin(), comp.end());
    VertexSet nbrs = neighborhood(g, members);
    int cls = 0;
    for (VertexId y : nbrs)
      if (s.q_hat.count(y)) ++cls;
    for (VertexId y : nbrs) {
      std::int64_t into = 0;
      for (const auto& [u, m] : g.incident(y))
        if (members.count(u)) into += m;
      worst_claim1 = std::max(worst_claim1, into);
    }
    largest_component = std::max(largest_component, static_cast<std::int64_t>(members.size()));
    s.components.push_back(std::move(members));
    s.component_class.push_back(cls);
    s.component_nbrs.push_back(std::move(nbrs));
  }
  ledger.require("edges from a C_m vertex into one component <= 1", worst_claim1, 1);
  ledger.require("max component |V(H)| <= 8k+8", largest_component, bound::component(k));
  const auto c2 = static_cast<std::int64_t>(s.c2_count());
  ledger.require("|C_2| <= |Qhat|-1",
                 c2, std::max<std::int64_t>(static_cast<std::int64_t>(s.q_hat.size()) - 1, 0));
  ledger.require("|C_2| <= 8k^2-1", c2, bound::c_2(k));
  for (int cls : s.component_class)
    if (cls > 2) throw InvariantViolation("component with more than two Qhat neighbors");

  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (s.component_class[i] == 2) continue;
    const std::vector<VertexId> nb(s.component_nbrs[i].begin(), s.component_nbrs[i].end());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (s.q_hat.count(nb[a]) && s.q_hat.count(nb[b])) continue;
        s.pair_components[{nb[a], nb[b]}].push_back(i);
      }
  }
  return s;
}

/// Adds a double edge for every pair adjacent to at least k+2 class 0/1
/// components. Returns the augmented pairs.
inline std::set<std::pair<VertexId, VertexId>> augment_heavy_pairs(Instance& inst,
                                                                   const Scaffold& s) {
  std::set<std::pair<VertexId, VertexId>> added;
  for (const auto& [pair, comps] : s.pair_components) {
    if (static_cast<std::int64_t>(comps.size()) >= inst.k + 2) {
      inst.graph.set_multiplicity(pair.first, pair.second, 2);
      added.insert(pair);
    }
  }
  return added;
}

// ---------------------------------------------------------------------------

struct Decomposition {
  Instance instance;
  VertexSet c_m;
  VertexSet c_g;
  VertexSet i_set;
  std::set<std::pair<VertexId, VertexId>> augmented_pairs;
  std::map<VertexId, VertexSet> contraction_map;
  std::optional<Scaffold> scaffold;  // absent on pass-through
  BoundLedger bounds;
};

struct DecomposeOutcome {
  std::optional<Decomposition> decomposition;
  std::string no_reason;  // non-empty iff decided NO

  bool decided_no() const { return !decomposition.has_value(); }
};

/// Checks the four structural properties of a decomposition and records them.
inline void check_decomposition(const Decomposition& d, std::int64_t k_in, BoundLedger& ledger) {
  const MultiGraph& g = d.instance.graph;
  const std::int64_t k = d.instance.k;
  ledger.require("k' = k (difference)", std::abs(k - k_in), 0);

  const std::size_t covered = d.c_m.size() + d.c_g.size() + d.i_set.size();
  VertexSet all = d.c_m;
  all.insert(d.c_g.begin(), d.c_g.end());
  all.insert(d.i_set.begin(), d.i_set.end());
  const bool partition = covered == g.vertex_count() && all == g.vertex_set();
  ledger.require("C_m, C_g, I partition V(G') (violations)", partition ? 0 : 1, 0);

  ledger.require("|C_m| <= 8k^2+2k", static_cast<std::int64_t>(d.c_m.size()), bound::c_m(k));
  ledger.require("C_g induces a forest (violations)",
                 is_forest(induced_subgraph(g, d.c_g)) ? 0 : 1, 0);
  ledger.require("|C_g| <= 160k^4+248k^3+80k^2-16k-8", static_cast<std::int64_t>(d.c_g.size()),
                 bound::c_g(k));

  std::int64_t inside_edges = 0, outside_nbrs = 0, missing_doubles = 0, widest = 0;
  for (VertexId v : d.i_set) {
    const auto nb = g.neighbors(v);
    widest = std::max(widest, static_cast<std::int64_t>(nb.size()));
    for (VertexId u : nb) {
      if (d.i_set.count(u)) ++inside_edges;
      if (!d.c_m.count(u)) ++outside_nbrs;
    }
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (g.multiplicity(nb[a], nb[b]) < 2) ++missing_doubles;
  }
  ledger.require("I independent (edges inside I)", inside_edges / 2, 0);
  ledger.require("N(v) subset of C_m for v in I (violations)", outside_nbrs, 0);
  ledger.require("N(v) double clique for v in I (missing double edges)", missing_doubles, 0);
  ledger.require("max |N(v)| <= 2k+1 for v in I", widest, bound::i_neighbors(k));
}

/// Decomposes a semi-reduced instance. Instances with at most one vertex, and
/// disconnected ones (which have at most 2k vertices once semi-reduced), pass
/// through with C_m = V.
inline DecomposeOutcome decompose(const Instance& inst) {
  const std::int64_t k = inst.k;
  Decomposition d;
  d.instance = inst;

  if (inst.graph.vertex_count() <= 1 || !is_connected(inst.graph)) {
    d.c_m = inst.graph.vertex_set();
    if (inst.graph.vertex_count() > 1) {
      d.bounds.require("|V| <= 2k (disconnected pass-through)",
                       static_cast<std::int64_t>(inst.graph.vertex_count()), 2 * k);
      check_decomposition(d, k, d.bounds);
    }
    return {std::move(d), {}};
  }

  std::optional<Scaffold> scaffold = build_scaffold(inst, d.bounds);
  if (!scaffold) return {std::nullopt, "feedback vertex set approximation exceeds 2k"};
  const Scaffold& s = *scaffold;

  d.augmented_pairs = augment_heavy_pairs(d.instance, s);
  d.c_m = s.c_m;

  std::vector<bool> garbage(s.components.size(), false);
  for (std::size_t i = 0; i < s.components.size(); ++i)
    if (s.component_class[i] == 2) garbage[i] = true;
  for (const auto& [pair, comps] : s.pair_components)
    if (static_cast<std::int64_t>(comps.size()) <= k + 1)
      for (std::size_t i : comps) garbage[i] = true;

  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (garbage[i]) {
      d.c_g.insert(s.components[i].begin(), s.components[i].end());
      continue;
    }
    ContractResult c = contract_component(d.instance.graph, s.components[i], d.instance.weight);
    d.instance.graph = std::move(c.graph);
    for (VertexId v : s.components[i]) d.instance.weight.erase(v);
    d.instance.weight[c.vertex] = c.weight;
    d.i_set.insert(c.vertex);
    d.contraction_map[c.vertex] = s.components[i];
  }

  // A double clique on k+2 vertices keeps at most one of them alive.
  for (VertexId v : d.i_set)
    if (static_cast<std::int64_t>(d.instance.graph.incident(v).size()) >= k + 2)
      return {std::nullopt, "an I-vertex neighborhood is a double clique on at least k+2 vertices"};

  check_decomposition(d, k, d.bounds);
  d.scaffold = std::move(scaffold);
  return {std::move(d), {}};
}

}  // namespace wtds

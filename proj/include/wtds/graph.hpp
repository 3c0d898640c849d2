#pragma once

// Undirected vertex-weighted multigraphs with edge multiplicity in {1, 2}.
//
// A double edge between two distinct vertices is a cycle of length two; it is
// how the kernel encodes "at most one of these two may survive". Self-loops
// cannot be represented.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wtds {

struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::string to_string(VertexId v) { return std::to_string(v.value); }

using VertexSet = std::set<VertexId>;
using Weight = std::int64_t;
using WeightMap = std::map<VertexId, Weight>;

/// Raised when a structural guarantee that the algorithms rely on is broken.
/// These indicate bugs (or a bound the theory does not actually give), never
/// bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  VertexId u;
  VertexId v;
  int multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class MultiGraph {
 public:
  static constexpr int kMaxMultiplicity = 2;

  /// Adds a vertex with a fresh id, larger than every id this graph has seen.
  VertexId add_vertex() {
    VertexId v{next_id_++};
    adj_.emplace(v, std::map<VertexId, int>{});
    return v;
  }

  void add_vertex(VertexId v) {
    if (v.value == 0) throw std::invalid_argument("vertex id 0 is reserved");
    if (!adj_.emplace(v, std::map<VertexId, int>{}).second)
      throw std::invalid_argument("duplicate vertex " + to_string(v));
    next_id_ = std::max(next_id_, v.value + 1);
  }

  /// Adds `mult` parallel copies of {u, v}; multiplicity saturates at 2.
  void add_edge(VertexId u, VertexId v, int mult = 1) {
    if (mult < 1) throw std::invalid_argument("edge multiplicity must be positive");
    check_pair(u, v);
    int m = std::min(kMaxMultiplicity, multiplicity(u, v) + mult);
    adj_[u][v] = m;
    adj_[v][u] = m;
  }

  void set_multiplicity(VertexId u, VertexId v, int mult) {
    if (mult < 0 || mult > kMaxMultiplicity)
      throw std::invalid_argument("multiplicity out of range");
    check_pair(u, v);
    if (mult == 0) {
      adj_[u].erase(v);
      adj_[v].erase(u);
    } else {
      adj_[u][v] = mult;
      adj_[v][u] = mult;
    }
  }

  void remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + to_string(v));
    for (const auto& [u, m] : it->second) adj_[u].erase(v);
    adj_.erase(it);
  }

  bool contains(VertexId v) const { return adj_.count(v) != 0; }

  int multiplicity(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return 0;
    auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
  }

  /// Neighbors with their edge multiplicities, ordered by id.
  const std::map<VertexId, int>& incident(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + to_string(v));
    return it->second;
  }

  /// Degree counting multiplicity: a vertex whose only incidence is one
  /// double edge has degree 2.
  int degree(VertexId v) const {
    int d = 0;
    for (const auto& [u, m] : incident(v)) d += m;
    return d;
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& [u, m] : incident(v)) out.push_back(u);
    return out;
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
  }

  VertexSet vertex_set() const {
    VertexSet out;
    for (const auto& [v, nb] : adj_) out.insert(out.end(), v);
    return out;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  bool empty() const { return adj_.empty(); }

  /// Number of edges counted with multiplicity.
  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& [v, nb] : adj_)
      for (const auto& [u, m] : nb)
        if (v < u) total += static_cast<std::size_t>(m);
    return total;
  }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [v, nb] : adj_)
      for (const auto& [u, m] : nb)
        if (v < u) out.push_back({v, u, m});
    return out;
  }

  bool has_double_edge() const {
    for (const auto& [v, nb] : adj_)
      for (const auto& [u, m] : nb)
        if (m >= 2) return true;
    return false;
  }

  std::uint32_t next_id() const { return next_id_; }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) { return a.adj_ == b.adj_; }

 private:
  void check_pair(VertexId u, VertexId v) const {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + to_string(u));
    if (!contains(u)) throw std::invalid_argument("unknown vertex " + to_string(u));
    if (!contains(v)) throw std::invalid_argument("unknown vertex " + to_string(v));
  }

  std::map<VertexId, std::map<VertexId, int>> adj_;
  std::uint32_t next_id_ = 1;
};

/// G with the vertices of `vs` removed. Every id in `vs` must belong to `g`.
inline MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& vs) {
  MultiGraph out = g;
  for (VertexId v : vs) out.remove_vertex(v);
  return out;
}

/// Subgraph induced by `keep`; ids outside `g` are rejected.
inline MultiGraph induced_subgraph(const MultiGraph& g, const VertexSet& keep) {
  VertexSet drop;
  for (VertexId v : keep)
    if (!g.contains(v)) throw std::invalid_argument("unknown vertex " + to_string(v));
  for (VertexId v : g.vertices())
    if (!keep.count(v)) drop.insert(v);
  return delete_vertices(g, drop);
}

/// Connected components, each sorted, ordered by their minimum id.
inline std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
  std::vector<std::vector<VertexId>> comps;
  VertexSet seen;
  for (VertexId s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<VertexId> comp{s};
    seen.insert(s);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& [u, m] : g.incident(comp[i]))
        if (seen.insert(u).second) comp.push_back(u);
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const MultiGraph& g) { return connected_components(g).size() == 1; }

/// True iff g is non-empty, connected, free of double edges and has |V|-1 edges.
inline bool is_tree(const MultiGraph& g) {
  if (g.empty() || g.has_double_edge()) return false;
  return g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// Acyclic in the multigraph sense: no double edge and every component a tree.
inline bool is_forest(const MultiGraph& g) {
  if (g.has_double_edge()) return false;
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

/// Neighborhood of a vertex set: vertices outside `s` adjacent to some member.
inline VertexSet neighborhood(const MultiGraph& g, const VertexSet& s) {
  VertexSet out;
  for (VertexId v : s)
    for (const auto& [u, m] : g.incident(v))
      if (!s.count(u)) out.insert(u);
  return out;
}

struct Instance {
  MultiGraph graph;
  WeightMap weight;
  std::int64_t k = 0;

  Weight total_weight() const {
    Weight t = 0;
    for (const auto& [v, w] : weight) t += w;
    return t;
  }

  Weight weight_of(const VertexSet& s) const {
    Weight t = 0;
    for (VertexId v : s) t += weight.at(v);
    return t;
  }

  VertexId add_vertex(Weight w) {
    VertexId v = graph.add_vertex();
    weight[v] = w;
    return v;
  }

  void remove_vertex(VertexId v) {
    graph.remove_vertex(v);
    weight.erase(v);
  }

  /// Throws std::invalid_argument if weights and vertices disagree or a
  /// weight is not positive.
  void validate() const {
    if (weight.size() != graph.vertex_count())
      throw std::invalid_argument("weight map does not match vertex set");
    for (const auto& [v, w] : weight) {
      if (!graph.contains(v)) throw std::invalid_argument("weight for unknown vertex " + to_string(v));
      if (w < 1) throw std::invalid_argument("non-positive weight at vertex " + to_string(v));
    }
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Sub-instance induced by `keep` with the same k.
inline Instance induced_instance(const Instance& inst, const VertexSet& keep) {
  Instance out{induced_subgraph(inst.graph, keep), {}, inst.k};
  for (VertexId v : keep) out.weight[v] = inst.weight.at(v);
  return out;
}

struct Solution {
  VertexSet deleted;
};

/// Whether deleting `s` leaves a tree.
inline bool is_tree_deletion_set(const MultiGraph& g, const VertexSet& s) {
  return is_tree(delete_vertices(g, s));
}

struct ContractResult {
  MultiGraph graph;
  VertexId vertex;
  Weight weight = 0;
};

/// Replaces the connected vertex set `comp` by one fresh vertex adjacent
/// (multiplicity 1) to N(comp), carrying the summed weight. Every outside
/// vertex must have at most one edge into `comp`, otherwise the contraction
/// would hide a cycle and InvariantViolation is thrown.
inline ContractResult contract_component(const MultiGraph& g, const VertexSet& comp,
                                         const WeightMap& weights) {
  if (comp.empty()) throw std::invalid_argument("cannot contract an empty set");
  for (VertexId v : comp)
    if (!g.contains(v)) throw std::invalid_argument("unknown vertex " + to_string(v));
  if (comp.size() == g.vertex_count())
    throw std::invalid_argument("cannot contract the whole graph");
  if (!is_connected(induced_subgraph(g, comp)))
    throw std::invalid_argument("contracted set is not connected");

  std::map<VertexId, int> edges_into;
  Weight total = 0;
  for (VertexId v : comp) {
    total += weights.at(v);
    for (const auto& [u, m] : g.incident(v))
      if (!comp.count(u)) edges_into[u] += m;
  }
  for (const auto& [u, count] : edges_into)
    if (count > 1)
      throw InvariantViolation("vertex " + to_string(u) + " has " + std::to_string(count) +
                               " edges into a contracted component");

  ContractResult out{delete_vertices(g, comp), {}, total};
  out.vertex = out.graph.add_vertex();
  for (const auto& [u, count] : edges_into) out.graph.add_edge(out.vertex, u, 1);
  return out;
}

}  // namespace wtds

#pragma once

#include <initializer_list>
#include <tuple>

#include "wtds/wtds.hpp"

namespace wtds::test {

inline VertexId V(std::uint32_t i) { return VertexId{i}; }

/// Graph on vertices 1..n with the given edges (u, v, multiplicity).
inline MultiGraph graph(std::uint32_t n, std::initializer_list<std::tuple<int, int, int>> edges) {
  MultiGraph g;
  for (std::uint32_t i = 1; i <= n; ++i) g.add_vertex(V(i));
  for (auto [u, v, m] : edges) g.add_edge(V(u), V(v), m);
  return g;
}

inline MultiGraph simple_graph(std::uint32_t n, std::initializer_list<std::pair<int, int>> edges) {
  MultiGraph g;
  for (std::uint32_t i = 1; i <= n; ++i) g.add_vertex(V(i));
  for (auto [u, v] : edges) g.add_edge(V(u), V(v));
  return g;
}

inline Instance unit_instance(MultiGraph g, std::int64_t k) {
  Instance inst{std::move(g), {}, k};
  for (VertexId v : inst.graph.vertices()) inst.weight[v] = 1;
  return inst;
}

inline MultiGraph complete(std::uint32_t n) {
  MultiGraph g;
  for (std::uint32_t i = 1; i <= n; ++i) g.add_vertex(V(i));
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) g.add_edge(V(i), V(j));
  return g;
}

inline MultiGraph cycle(std::uint32_t n) {
  MultiGraph g;
  for (std::uint32_t i = 1; i <= n; ++i) g.add_vertex(V(i));
  for (std::uint32_t i = 1; i <= n; ++i) g.add_edge(V(i), V(i % n + 1));
  return g;
}

inline MultiGraph petersen() {
  MultiGraph g;
  for (std::uint32_t i = 1; i <= 10; ++i) g.add_vertex(V(i));
  for (std::uint32_t i = 0; i < 5; ++i) {
    g.add_edge(V(i + 1), V((i + 1) % 5 + 1));          // outer 5-cycle
    g.add_edge(V(i + 6), V((i + 2) % 5 + 6));          // inner pentagram
    g.add_edge(V(i + 1), V(i + 6));                    // spokes
  }
  return g;
}

/// Two triangles 1-2-3 and 1-4-5 sharing vertex 1.
inline MultiGraph butterfly() { return simple_graph(5, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}}); }

/// Random multigraph on n vertices, ids 1..n.
inline MultiGraph random_multigraph(std::uint64_t seed, int n, double p, double p_double) {
  GenSpec s;
  s.family = Family::Random;
  s.n_min = s.n_max = n;
  s.edge_prob = p;
  s.double_prob = p_double;
  s.seed = seed;
  return generate_one(s, 0).instance.graph;
}

}  // namespace wtds::test

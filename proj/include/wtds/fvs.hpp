#pragma once

// Local-ratio 2-approximation for (cardinality) feedback vertex set on
// multigraphs, after Becker and Geiger: peel degree <= 1 vertices, subtract
// the largest multiple of the degree function that keeps every residual
// weight non-negative, move zero-weight vertices into the solution, repeat.
// A reverse-order pass then drops every vertex that is no longer needed.

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"

namespace wtds {

struct FvsResult {
  VertexSet fvs;
};

namespace detail {

inline void strip_low_degree(MultiGraph& h) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : h.vertices()) {
      if (h.degree(v) <= 1) {
        h.remove_vertex(v);
        changed = true;
      }
    }
  }
}

}  // namespace detail

inline FvsResult approx_fvs(const MultiGraph& g) {
  using Ratio = boost::multiprecision::cpp_rational;

  MultiGraph h = g;
  std::map<VertexId, Ratio> residual;
  for (VertexId v : g.vertices()) residual[v] = 1;
  std::vector<VertexId> order;  // insertion order into the solution

  for (;;) {
    detail::strip_low_degree(h);
    if (h.empty()) break;
    std::optional<Ratio> gamma;
    for (VertexId v : h.vertices()) {
      Ratio r = residual[v] / h.degree(v);
      if (!gamma || r < *gamma) gamma = r;
    }
    std::vector<VertexId> zeroed;
    for (VertexId v : h.vertices()) {
      residual[v] -= *gamma * h.degree(v);
      if (residual[v] == 0) zeroed.push_back(v);
    }
    for (VertexId v : zeroed) {
      order.push_back(v);
      h.remove_vertex(v);
    }
  }

  FvsResult out{VertexSet(order.begin(), order.end())};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    out.fvs.erase(*it);
    if (!is_forest(delete_vertices(g, out.fvs))) out.fvs.insert(*it);
  }
  return out;
}

}  // namespace wtds

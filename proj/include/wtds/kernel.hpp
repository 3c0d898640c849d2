#pragma once

// End-to-end kernelization: semi-reduce, decompose, encode every I-vertex as
// the equation "exactly one neighbor survives", keep the I-vertices whose
// equations survive row-basis peeling, and return the induced sub-instance.

#include <optional>
#include <string>

#include "bounds.hpp"
#include "decomposition.hpp"
#include "graph.hpp"
#include "lineq.hpp"
#include "reductions.hpp"

namespace wtds {

struct EquationEncoding {
  std::vector<VertexId> variables;  // column j <-> C_m vertex
  std::vector<VertexId> equations;  // row i <-> I vertex
  LinearSystem system;              // row i: sum_{u in N(v_i)} x_u - 1 = 0
};

/// One row per I-vertex (ascending ids), one column per C_m vertex (ascending
/// ids) plus the constant column. Throws InvariantViolation if an I-vertex has
/// a neighbor outside C_m or no neighbor at all.
inline EquationEncoding encode_equations(const Decomposition& dec) {
  EquationEncoding enc;
  enc.variables.assign(dec.c_m.begin(), dec.c_m.end());
  std::map<VertexId, std::size_t> column;
  for (std::size_t j = 0; j < enc.variables.size(); ++j) column[enc.variables[j]] = j;

  const std::size_t n = enc.variables.size();
  for (VertexId v : dec.i_set) {
    std::vector<Rational> row(n + 1, Rational(0));
    const auto& inc = dec.instance.graph.incident(v);
    if (inc.empty()) throw InvariantViolation("I-vertex " + to_string(v) + " has no neighbor");
    for (const auto& [u, m] : inc) {
      auto it = column.find(u);
      if (it == column.end())
        throw InvariantViolation("I-vertex " + to_string(v) + " has neighbor " + to_string(u) +
                                 " outside C_m");
      row[it->second] = 1;
    }
    row[n] = -1;
    enc.equations.push_back(v);
    enc.system.add_row(std::move(row), static_cast<std::int64_t>(v.value));
  }
  return enc;
}

struct KernelReport {
  Instance input;
  std::optional<Decision> decided;  // early YES/NO; kernel is then empty
  std::string decided_by;
  Instance kernel;
  VertexSet c_m;
  VertexSet c_g;
  VertexSet i_set;
  VertexSet i_kept;
  RuleTrace trace;
  BoundLedger bounds;
};

inline KernelReport kernelize(const Instance& input) {
  input.validate();
  KernelReport rep;
  rep.input = input;
  rep.kernel.k = input.k;

  SemiReduced semi = semi_reduce(input);
  rep.trace = semi.trace;
  if (semi.decided) {
    rep.decided = semi.decided;
    rep.decided_by = semi.instance.k < 0 ? "budget became negative" : "reduction emptied the graph";
    return rep;
  }
  const Instance& reduced = semi.instance;
  const std::int64_t k = reduced.k;
  if (reduced.graph.vertex_count() == 1) {
    rep.decided = Decision::Yes;
    rep.decided_by = "reduced to a single vertex";
    return rep;
  }

  DecomposeOutcome outcome = decompose(reduced);
  if (outcome.decided_no()) {
    rep.decided = Decision::No;
    rep.decided_by = outcome.no_reason;
    return rep;
  }
  Decomposition& dec = *outcome.decomposition;
  rep.bounds.append(dec.bounds);

  EquationEncoding enc = encode_equations(dec);
  LinearSystem kept = reduce_equations(enc.system, k);
  for (std::int64_t tag : kept.tags) rep.i_kept.insert(VertexId{static_cast<std::uint32_t>(tag)});

  const auto c_m = static_cast<std::int64_t>(dec.c_m.size());
  const auto c_g = static_cast<std::int64_t>(dec.c_g.size());
  const auto i_kept = static_cast<std::int64_t>(rep.i_kept.size());
  rep.bounds.require("|I'| <= (|C_m|+1)(k+1)", i_kept, (c_m + 1) * (k + 1));
  rep.bounds.require("|I'| <= 8k^3+10k^2+3k+1", i_kept, bound::i_kept(k));

  VertexSet keep = dec.c_m;
  keep.insert(dec.c_g.begin(), dec.c_g.end());
  keep.insert(rep.i_kept.begin(), rep.i_kept.end());
  rep.kernel = induced_instance(dec.instance, keep);
  // Contracted I-vertices may carry more than k+1; capping is always safe.
  for (auto& [v, w] : rep.kernel.weight) w = std::min<Weight>(w, k + 1);

  const auto kv = static_cast<std::int64_t>(rep.kernel.graph.vertex_count());
  const auto ke = static_cast<std::int64_t>(rep.kernel.graph.edge_count());
  const auto cg_components =
      static_cast<std::int64_t>(connected_components(induced_subgraph(rep.kernel.graph, dec.c_g)).size());
  rep.bounds.require("|V(kernel)| <= |C_m|+|C_g|+|I'|", kv, c_m + c_g + i_kept);
  rep.bounds.require("|V(kernel)| <= (8k^2+2k)+(160k^4+...)+(8k^3+...)", kv,
                     bound::c_m(k) + bound::c_g(k) + bound::i_kept(k));
  rep.bounds.require("|E(kernel)| <= |C_m|(|C_m|-1)+|C_g|+(2k+2)comp(C_g)+(2k+1)|I'|", ke,
                     c_m * (c_m - 1) + c_g + (2 * k + 2) * cg_components + (2 * k + 1) * i_kept);
  Weight heaviest = 0;
  for (const auto& [v, w] : rep.kernel.weight) heaviest = std::max(heaviest, w);
  rep.bounds.require("max weight <= k+1", heaviest, k + 1);
  rep.bounds.require("kernel k = reduced k (difference)", std::abs(rep.kernel.k - k), 0);

  rep.c_m = dec.c_m;
  rep.c_g = dec.c_g;
  rep.i_set = dec.i_set;
  return rep;
}

}  // namespace wtds

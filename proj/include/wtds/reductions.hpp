#pragma once

// The six reduction rules for weighted tree deletion set and a fixpoint driver.
//
// Every rule is split into a detector (rule1_negative_k ... rule6_weight_cap)
// and an `apply_*` transformation on explicit vertices, so that a recorded
// trace can be replayed step by step on the original instance.

#include <optional>
#include <string>
#include <vector>

#include "flower.hpp"
#include "graph.hpp"

namespace wtds {

enum class Decision { Yes, No };

inline const char* to_string(Decision d) { return d == Decision::Yes ? "YES" : "NO"; }

struct TraceStep {
  int rule = 0;
  std::vector<VertexId> affected;
  std::vector<VertexId> created;
  std::int64_t k_before = 0;
  std::int64_t k_after = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using RuleTrace = std::vector<TraceStep>;

struct RuleOutcome {
  enum class Kind { NotApplicable, Applied, DecidedNo };

  Kind kind = Kind::NotApplicable;
  Instance instance;  // set when Applied
  TraceStep step;     // set when Applied

  bool applied() const { return kind == Kind::Applied; }

  static RuleOutcome not_applicable() { return {}; }
  static RuleOutcome decided_no() { return {Kind::DecidedNo, {}, {}}; }
};

// ---------------------------------------------------------------------------
// Transformations.

/// Deletes `vs` and charges their weight to the budget.
inline Instance apply_delete(const Instance& inst, const VertexSet& vs) {
  Instance out = inst;
  for (VertexId v : vs) {
    out.k -= inst.weight.at(v);
    out.remove_vertex(v);
  }
  return out;
}

/// Folds the pendant vertex `leaf` into its neighbor `hub`.
inline Instance apply_fold_leaf(const Instance& inst, VertexId leaf, VertexId hub) {
  Instance out = inst;
  out.weight.at(hub) += inst.weight.at(leaf);
  out.remove_vertex(leaf);
  return out;
}

/// `path` is v0, v1..vl, v(l+1) with l >= 2 (the ends may coincide). The inner
/// vertices become u1 (minimum inner weight) and u2 (the rest); with
/// `shortcut`, u2 is dropped and u1 joined to v(l+1). Returns the new ids.
inline Instance apply_compress_path(const Instance& inst, const std::vector<VertexId>& path,
                                    bool shortcut, std::vector<VertexId>* created = nullptr) {
  if (path.size() < 4) throw std::invalid_argument("path compression needs at least two inner vertices");
  Instance out = inst;
  const VertexId first = path.front();
  const VertexId last = path.back();
  Weight lightest = inst.weight.at(path[1]);
  Weight sum = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    lightest = std::min(lightest, inst.weight.at(path[i]));
    sum += inst.weight.at(path[i]);
    out.remove_vertex(path[i]);
  }
  VertexId u1 = out.add_vertex(lightest);
  VertexId u2 = out.add_vertex(sum - lightest);
  out.graph.add_edge(first, u1);
  out.graph.add_edge(u1, u2);
  out.graph.add_edge(u2, last);
  std::vector<VertexId> made{u1, u2};
  if (shortcut) {
    out.remove_vertex(u2);
    out.graph.add_edge(u1, last);
    made.pop_back();
  }
  if (created) *created = made;
  return out;
}

/// Lowers every weight in `vs` to k+1.
inline Instance apply_weight_cap(const Instance& inst, const VertexSet& vs) {
  Instance out = inst;
  for (VertexId v : vs) out.weight.at(v) = inst.k + 1;
  return out;
}

// ---------------------------------------------------------------------------
// Detectors.

inline RuleOutcome make_applied(int rule, const Instance& before, Instance after,
                                std::vector<VertexId> affected, std::vector<VertexId> created = {}) {
  RuleOutcome o;
  o.kind = RuleOutcome::Kind::Applied;
  o.step = {rule, std::move(affected), std::move(created), before.k, after.k};
  o.instance = std::move(after);
  return o;
}

inline RuleOutcome rule1_negative_k(const Instance& inst) {
  return inst.k < 0 ? RuleOutcome::decided_no() : RuleOutcome::not_applicable();
}

/// Deletes every component lighter than (total weight - k).
inline RuleOutcome rule2_small_components(const Instance& inst) {
  const auto comps = connected_components(inst.graph);
  if (comps.size() <= 1) return RuleOutcome::not_applicable();
  const Weight threshold = inst.total_weight() - inst.k;
  VertexSet doomed;
  for (const auto& comp : comps) {
    Weight w = 0;
    for (VertexId v : comp) w += inst.weight.at(v);
    if (w < threshold) doomed.insert(comp.begin(), comp.end());
  }
  if (doomed.empty()) return RuleOutcome::not_applicable();
  return make_applied(2, inst, apply_delete(inst, doomed), {doomed.begin(), doomed.end()});
}

inline RuleOutcome rule3_degree_one(const Instance& inst) {
  for (VertexId v : inst.graph.vertices()) {
    if (inst.graph.degree(v) != 1) continue;
    VertexId u = inst.graph.incident(v).begin()->first;
    return make_applied(3, inst, apply_fold_leaf(inst, v, u), {v, u});
  }
  return RuleOutcome::not_applicable();
}

namespace detail {

// Interior vertex of a compressible path: two distinct neighbors, both via
// simple edges. A vertex on a double edge is never compressed away.
inline bool is_path_interior(const MultiGraph& g, VertexId v) {
  const auto& inc = g.incident(v);
  if (inc.size() != 2) return false;
  for (const auto& [u, m] : inc)
    if (m != 1) return false;
  return true;
}

inline VertexId other_neighbor(const MultiGraph& g, VertexId v, VertexId from) {
  for (const auto& [u, m] : g.incident(v))
    if (u != from) return u;
  return from;
}

/// Maximal runs of path-interior vertices as full paths v0, inner..., v(l+1).
/// A component that is a plain cycle yields one run from and back to its
/// minimum vertex.
inline std::vector<std::vector<VertexId>> maximal_runs(const MultiGraph& g) {
  std::vector<std::vector<VertexId>> runs;
  VertexSet seen;
  for (VertexId v : g.vertices()) {
    if (seen.count(v) || !is_path_interior(g, v)) continue;
    const auto nb = g.neighbors(v);

    auto walk = [&](VertexId start) {
      std::vector<VertexId> seq;
      VertexId prev = v, cur = start;
      while (cur != v && is_path_interior(g, cur)) {
        seq.push_back(cur);
        VertexId next = other_neighbor(g, cur, prev);
        prev = cur;
        cur = next;
      }
      return std::make_pair(seq, cur);
    };

    auto [left, left_end] = walk(nb[0]);
    std::vector<VertexId> path;
    if (left_end == v) {
      // Plain cycle: v is its minimum vertex since the scan is ordered.
      path.push_back(v);
      path.insert(path.end(), left.begin(), left.end());
      path.push_back(v);
    } else {
      auto [right, right_end] = walk(nb[1]);
      path.push_back(left_end);
      path.insert(path.end(), left.rbegin(), left.rend());
      path.push_back(v);
      path.insert(path.end(), right.begin(), right.end());
      path.push_back(right_end);
      if (path.front() > path.back() ||
          (path.front() == path.back() && path[1] > path[path.size() - 2]))
        std::reverse(path.begin(), path.end());
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) seen.insert(path[i]);
    runs.push_back(std::move(path));
  }
  return runs;
}

}  // namespace detail

/// Compresses the longest applicable run of degree-2 vertices.
inline RuleOutcome rule4_path_compress(const Instance& inst) {
  const std::vector<VertexId>* best = nullptr;
  bool best_shortcut = false;
  const auto runs = detail::maximal_runs(inst.graph);
  for (const auto& path : runs) {
    const std::size_t inner = path.size() - 2;
    const bool heavy_end = inst.weight.at(path.front()) > inst.k || inst.weight.at(path.back()) > inst.k;
    const bool applicable = inner >= 3 || (inner == 2 && heavy_end);
    if (!applicable) continue;
    if (!best || path.size() > best->size()) {
      best = &path;
      best_shortcut = heavy_end;
    }
  }
  if (!best) return RuleOutcome::not_applicable();
  std::vector<VertexId> created;
  Instance after = apply_compress_path(inst, *best, best_shortcut, &created);
  return make_applied(4, inst, std::move(after), *best, std::move(created));
}

/// Deletes the first vertex (by id) carrying an x-flower of order k+1.
inline RuleOutcome rule5_flower(const Instance& inst) {
  if (inst.k < 0) return RuleOutcome::not_applicable();
  for (VertexId x : inst.graph.vertices()) {
    if (max_flower_order(inst.graph, x) >= inst.k + 1)
      return make_applied(5, inst, apply_delete(inst, {x}), {x});
  }
  return RuleOutcome::not_applicable();
}

inline RuleOutcome rule6_weight_cap(const Instance& inst) {
  VertexSet heavy;
  for (const auto& [v, w] : inst.weight)
    if (w > inst.k + 1) heavy.insert(v);
  if (heavy.empty()) return RuleOutcome::not_applicable();
  return make_applied(6, inst, apply_weight_cap(inst, heavy), {heavy.begin(), heavy.end()});
}

// ---------------------------------------------------------------------------
// Driver.

struct SemiReduced {
  Instance instance;
  RuleTrace trace;
  std::optional<Decision> decided;  // only ever No here
};

/// Applies rules 1..6 in fixed priority, restarting after every application,
/// until none applies. An emptied graph is a NO instance (no tree remains).
inline SemiReduced semi_reduce(const Instance& input) {
  using Rule = RuleOutcome (*)(const Instance&);
  static constexpr Rule kRules[] = {rule1_negative_k, rule2_small_components, rule3_degree_one,
                                    rule4_path_compress, rule5_flower, rule6_weight_cap};
  SemiReduced out{input, {}, std::nullopt};
  for (;;) {
    bool progressed = false;
    for (Rule rule : kRules) {
      RuleOutcome o = rule(out.instance);
      if (o.kind == RuleOutcome::Kind::DecidedNo) {
        out.decided = Decision::No;
        return out;
      }
      if (o.applied()) {
        out.trace.push_back(std::move(o.step));
        out.instance = std::move(o.instance);
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  if (out.instance.graph.empty()) out.decided = Decision::No;
  return out;
}

/// Re-applies a recorded trace to the instance it was recorded on.
inline Instance replay(const Instance& input, const RuleTrace& trace) {
  Instance cur = input;
  for (const TraceStep& s : trace) {
    if (cur.k != s.k_before) throw std::invalid_argument("trace does not match instance");
    switch (s.rule) {
      case 2:
      case 5:
        cur = apply_delete(cur, VertexSet(s.affected.begin(), s.affected.end()));
        break;
      case 3:
        cur = apply_fold_leaf(cur, s.affected.at(0), s.affected.at(1));
        break;
      case 4: {
        std::vector<VertexId> made;
        cur = apply_compress_path(cur, s.affected, s.created.size() == 1, &made);
        if (made != s.created) throw std::invalid_argument("trace created different vertices");
        break;
      }
      case 6:
        cur = apply_weight_cap(cur, VertexSet(s.affected.begin(), s.affected.end()));
        break;
      default:
        throw std::invalid_argument("unknown rule in trace: " + std::to_string(s.rule));
    }
  }
  return cur;
}

}  // namespace wtds

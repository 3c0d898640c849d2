#pragma once

// Seeded instance generators. Every draw goes through mt19937_64 (whose output
// sequence is fixed by the standard) with explicit modulo and bit arithmetic,
// so a (spec, index) pair gives the same instance on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wtds {

enum class Family { Random, Planted, Theta, DoubleEdge, Mixed };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Random: return "random";
    case Family::Planted: return "planted";
    case Family::Theta: return "theta";
    case Family::DoubleEdge: return "double-edge";
    case Family::Mixed: return "mixed";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::Random, Family::Planted, Family::Theta, Family::DoubleEdge, Family::Mixed})
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown family '" + s + "'");
}

struct GenSpec {
  Family family = Family::Mixed;
  int n_min = 1;
  int n_max = 12;
  double edge_prob = 0.3;
  double double_prob = 0.1;  // chance that a drawn edge is doubled
  Weight w_min = 1;
  Weight w_max = 3;
  std::int64_t k_min = 0;
  std::int64_t k_max = 3;
  std::uint64_t seed = 1;
};

struct Generated {
  Instance instance;
  Family family = Family::Random;
  std::optional<Weight> planted_weight;  // upper bound on the optimum, planted family only
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi]; modulo bias is irrelevant at these ranges.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

inline Instance empty_instance(int n, Rng& rng, const GenSpec& spec) {
  Instance inst;
  for (int i = 1; i <= n; ++i) {
    inst.graph.add_vertex(VertexId{static_cast<std::uint32_t>(i)});
    inst.weight[VertexId{static_cast<std::uint32_t>(i)}] = rng.range(spec.w_min, spec.w_max);
  }
  inst.k = rng.range(spec.k_min, spec.k_max);
  return inst;
}

inline VertexId vid(std::int64_t i) { return VertexId{static_cast<std::uint32_t>(i)}; }

inline void random_tree_on(Instance& inst, const std::vector<VertexId>& vs, Rng& rng) {
  for (std::size_t i = 1; i < vs.size(); ++i)
    inst.graph.add_edge(vs[i], vs[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i) - 1))]);
}

inline void gen_random(Instance& inst, int n, Rng& rng, const GenSpec& spec) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.chance(spec.edge_prob)) inst.graph.add_edge(vid(i), vid(j), rng.chance(spec.double_prob) ? 2 : 1);
}

// Random tree on the non-planted vertices; planted vertices hang off it with
// extra edges. Deleting the planted set always leaves that tree.
inline Weight gen_planted(Instance& inst, int n, Rng& rng, const GenSpec& spec) {
  const std::int64_t budget = std::max<std::int64_t>(spec.k_max, 1);
  const std::int64_t planted = std::min<std::int64_t>(rng.range(1, budget), n - 1);
  std::vector<VertexId> tree, marked;
  for (int i = 1; i <= n; ++i) (i <= n - planted ? tree : marked).push_back(vid(i));
  random_tree_on(inst, tree, rng);

  Weight total = 0;
  for (VertexId v : marked) {
    inst.weight[v] = 1;
    ++total;
  }
  for (VertexId v : marked)
    while (total < budget && rng.chance(0.3)) {
      ++inst.weight[v];
      ++total;
    }
  for (VertexId v : marked) {
    const std::int64_t attach = rng.range(1, 3);
    for (std::int64_t a = 0; a < attach; ++a)
      inst.graph.add_edge(v, tree[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(tree.size()) - 1))],
                          rng.chance(spec.double_prob) ? 2 : 1);
    for (VertexId u : marked)
      if (u < v && rng.chance(spec.edge_prob)) inst.graph.add_edge(u, v);
  }
  inst.k = total;
  return total;
}

// Two hubs joined by internally disjoint paths, leftover vertices as pendants
// or chords.
inline void gen_theta(Instance& inst, int n, Rng& rng, const GenSpec& spec) {
  if (n < 2) return;
  const VertexId a = vid(1), b = vid(2);
  int next = 3;
  const int paths = static_cast<int>(rng.range(2, 4));
  for (int p = 0; p < paths && next <= n; ++p) {
    VertexId prev = a;
    const int len = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < len && next <= n; ++i) {
      inst.graph.add_edge(prev, vid(next));
      prev = vid(next++);
    }
    if (prev != a) inst.graph.add_edge(prev, b);
  }
  for (; next <= n; ++next) inst.graph.add_edge(vid(next), vid(rng.range(1, next - 1)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (inst.graph.multiplicity(vid(i), vid(j)) == 0 && rng.chance(spec.edge_prob / 4))
        inst.graph.add_edge(vid(i), vid(j));
}

// Random tree plus a few double edges and chords.
inline void gen_double_edge(Instance& inst, int n, Rng& rng, const GenSpec& spec) {
  std::vector<VertexId> all;
  for (int i = 1; i <= n; ++i) all.push_back(vid(i));
  random_tree_on(inst, all, rng);
  for (const Edge& e : inst.graph.edges())
    if (rng.chance(0.3)) inst.graph.set_multiplicity(e.u, e.v, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (inst.graph.multiplicity(vid(i), vid(j)) == 0 && rng.chance(spec.edge_prob / 3))
        inst.graph.add_edge(vid(i), vid(j), rng.chance(0.5) ? 2 : 1);
}

}  // namespace detail

/// The index-th instance of the stream described by `spec`.
inline Generated generate_one(const GenSpec& spec, std::uint64_t index) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min) throw std::invalid_argument("bad n range");
  if (spec.w_min < 1 || spec.w_max < spec.w_min) throw std::invalid_argument("bad weight range");
  if (spec.k_max < spec.k_min) throw std::invalid_argument("bad k range");

  detail::Rng rng(detail::splitmix64(spec.seed ^ detail::splitmix64(index)));
  Generated out;
  out.family = spec.family;
  if (out.family == Family::Mixed) {
    static constexpr Family kCycle[] = {Family::Random, Family::Planted, Family::Theta, Family::DoubleEdge};
    out.family = kCycle[index % 4];
  }
  const int n = static_cast<int>(rng.range(spec.n_min, spec.n_max));
  out.instance = detail::empty_instance(n, rng, spec);
  switch (out.family) {
    case Family::Random: detail::gen_random(out.instance, n, rng, spec); break;
    case Family::Planted:
      if (n >= 2) out.planted_weight = detail::gen_planted(out.instance, n, rng, spec);
      break;
    case Family::Theta: detail::gen_theta(out.instance, n, rng, spec); break;
    case Family::DoubleEdge: detail::gen_double_edge(out.instance, n, rng, spec); break;
    case Family::Mixed: break;
  }
  return out;
}

/// Instances [first, first + count) of the stream.
inline std::vector<Generated> generate(const GenSpec& spec, std::uint64_t count, std::uint64_t first = 0) {
  std::vector<Generated> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(generate_one(spec, first + i));
  return out;
}

}  // namespace wtds

#pragma once

// Equivalence campaign (kernelize vs. exhaustive oracle) and small-graph
// enumeration used by the property suites.

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "generate.hpp"
#include "io.hpp"
#include "kernel.hpp"
#include "oracle.hpp"
#include "report.hpp"

namespace wtds {

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  int max_n = 12;
  std::int64_t max_k = 3;
  Weight max_w = 3;
  int oracle_limit = 15;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Empty when the configuration is usable, otherwise the reason it is not.
inline std::string config_error(const VerifyConfig& c) {
  if (c.max_n < 1) return "max-n must be at least 1";
  if (c.max_k < 0) return "max-k must be non-negative";
  if (c.max_w < 1) return "max weight must be positive";
  if (c.oracle_limit < 1 || c.oracle_limit > 25) return "oracle-limit must lie in 1..25";
  if (c.max_n > c.oracle_limit)
    return "max-n " + std::to_string(c.max_n) + " exceeds oracle-limit " + std::to_string(c.oracle_limit);
  return {};
}

struct CaseResult {
  std::uint64_t index = 0;
  Family family = Family::Random;
  Instance input;
  Decision input_decision = Decision::No;
  std::optional<Weight> optimum;
  std::optional<Decision> early;       // kernelize decided without a kernel
  Decision kernel_decision = Decision::No;
  std::size_t kernel_n = 0;
  std::size_t kernel_m = 0;
  BoundLedger bounds;
  std::string error;                   // exception text, empty if none
  bool planted_ok = true;

  bool agrees() const {
    return error.empty() && planted_ok && (early ? *early : kernel_decision) == input_decision;
  }
};

inline CaseResult run_case(const Generated& gen, std::uint64_t index, int oracle_limit) {
  CaseResult r;
  r.index = index;
  r.family = gen.family;
  r.input = gen.instance;
  try {
    const OracleAnswer truth = exact_tds(gen.instance, oracle_limit);
    r.input_decision = truth.decision;
    r.optimum = truth.optimum_weight;
    if (gen.planted_weight && gen.instance.k >= *gen.planted_weight) r.planted_ok = truth.decision == Decision::Yes;

    KernelReport rep = kernelize(gen.instance);
    r.bounds = rep.bounds;
    if (rep.decided) {
      r.early = rep.decided;
    } else {
      r.kernel_n = rep.kernel.graph.vertex_count();
      r.kernel_m = rep.kernel.graph.edge_count();
      r.kernel_decision = exact_tds(rep.kernel, oracle_limit).decision;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

/// Runs `body(i)` for i in [0, count) on a pool of threads.
inline void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::uint64_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

inline GenSpec campaign_spec(const VerifyConfig& c) {
  GenSpec s;
  s.family = Family::Mixed;
  s.n_min = 1;
  s.n_max = c.max_n;
  s.w_max = c.max_w;
  s.k_max = c.max_k;
  s.seed = c.seed;
  return s;
}

struct VerifyResult {
  VerifyConfig config;
  std::vector<CaseResult> cases;  // ordered by index

  std::size_t disagreements() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.agrees(); }));
  }
};

inline VerifyResult run_verify(const VerifyConfig& config) {
  if (std::string err = config_error(config); !err.empty()) throw std::invalid_argument(err);
  VerifyResult out{config, std::vector<CaseResult>(config.samples)};
  const GenSpec spec = campaign_spec(config);
  parallel_for(config.samples, config.threads, [&](std::uint64_t i) {
    out.cases[i] = run_case(generate_one(spec, i), i, config.oracle_limit);
  });
  return out;
}

/// Deterministic report: depends only on the configuration minus `threads`.
inline Json to_json(const VerifyResult& v) {
  std::size_t yes = 0, early = 0, kernels = 0, max_kernel_n = 0, checks = 0;
  std::map<std::string, std::int64_t> family_count;
  struct BoundStat {
    std::int64_t evaluated = 0, violated = 0, max_lhs = 0;
  };
  std::map<std::string, BoundStat> per_bound;
  for (const CaseResult& c : v.cases) {
    ++family_count[to_string(c.family)];
    if (c.input_decision == Decision::Yes) ++yes;
    if (c.early) ++early;
    else if (c.error.empty()) {
      ++kernels;
      max_kernel_n = std::max(max_kernel_n, c.kernel_n);
    }
    for (const BoundCheck& b : c.bounds.entries()) {
      BoundStat& s = per_bound[b.name];
      ++s.evaluated;
      ++checks;
      if (!b.satisfied) ++s.violated;
      s.max_lhs = std::max(s.max_lhs, b.lhs);
    }
  }

  Json j;
  j["config"] = {{"seed", v.config.seed},
                 {"samples", v.config.samples},
                 {"max_n", v.config.max_n},
                 {"max_k", v.config.max_k},
                 {"max_w", v.config.max_w},
                 {"oracle_limit", v.config.oracle_limit}};
  Json fam;
  for (const auto& [name, n] : family_count) fam[name] = n;
  j["summary"] = {{"instances", v.cases.size()},
                  {"disagreements", v.disagreements()},
                  {"yes", yes},
                  {"no", v.cases.size() - yes},
                  {"early_decisions", early},
                  {"kernels", kernels},
                  {"max_kernel_n", max_kernel_n},
                  {"bound_checks", checks},
                  {"families", fam}};
  Json bounds = Json::array();
  for (const auto& [name, s] : per_bound)
    bounds.push_back({{"name", name}, {"evaluated", s.evaluated}, {"violated", s.violated}, {"max_lhs", s.max_lhs}});
  j["bounds"] = bounds;

  Json failures = Json::array();
  for (const CaseResult& c : v.cases) {
    if (c.agrees()) continue;
    Json f = {{"index", c.index}, {"family", to_string(c.family)}, {"input_decision", to_string(c.input_decision)}};
    if (c.early) f["kernel_decision"] = std::string("early ") + to_string(*c.early);
    else f["kernel_decision"] = to_string(c.kernel_decision);
    if (!c.error.empty()) f["error"] = c.error;
    if (!c.planted_ok) f["error"] = "oracle rejects planted budget";
    f["instance"] = serialize_instance(c.input);
    failures.push_back(f);
  }
  j["failures"] = failures;
  return j;
}

// ---------------------------------------------------------------------------
// Unlabeled simple graphs up to isomorphism.

namespace detail {

// Adjacency as bitmasks over vertices 0..n-1.
using SmallGraph = std::vector<std::uint32_t>;

inline std::uint64_t code_under(const SmallGraph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = code << 1 | (g[order[i]] >> order[j] & 1);
  return code;
}

// Minimum code over vertex orders that list degree classes in a fixed order;
// isomorphic graphs share it, since isomorphisms preserve degrees.
inline std::uint64_t canonical_code(const SmallGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::popcount(g[a]) > std::popcount(g[b]); });
  std::vector<std::pair<int, int>> classes;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && std::popcount(g[order[j]]) == std::popcount(g[order[i]])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      best = std::min(best, code_under(g, order));
      return;
    }
    auto first = order.begin() + classes[c].first, last = order.begin() + classes[c].second;
    std::sort(first, last);
    do rec(c + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

}  // namespace detail

/// One representative of every isomorphism class of simple graphs on n
/// vertices (ids 1..n), optionally only the connected ones.
inline std::vector<MultiGraph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_graphs supports 1..8 vertices");
  std::vector<detail::SmallGraph> level{detail::SmallGraph{0}};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<detail::SmallGraph> next;
    for (const auto& g : level)
      for (std::uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
        detail::SmallGraph h = g;
        h.push_back(nb);
        for (int i = 0; i < size - 1; ++i)
          if (nb >> i & 1) h[i] |= 1u << (size - 1);
        if (seen.insert(detail::canonical_code(h)).second) next.push_back(std::move(h));
      }
    level = std::move(next);
  }
  std::vector<MultiGraph> out;
  for (const auto& h : level) {
    MultiGraph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(VertexId{static_cast<std::uint32_t>(i)});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (h[i] >> j & 1) g.add_edge(VertexId{static_cast<std::uint32_t>(i + 1)}, VertexId{static_cast<std::uint32_t>(j + 1)});
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace wtds

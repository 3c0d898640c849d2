// Acceptance suite: one PASS/FAIL line per criterion, exit status = number of
// failed criteria. Usage: acceptance <path-to-wtds-cli>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "wtds/wtds.hpp"

using namespace wtds;

namespace {

int failures = 0;

void verdict(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << ": " << detail << std::endl;
  failures += !ok;
}

// Criteria 1 and 2 share one campaign.
void kernel_campaign() {
  VerifyConfig cfg;
  cfg.seed = 20240601;
  cfg.samples = 4000;  // mixed stream: a quarter each random, planted, theta, double-edge
  cfg.max_n = 12;
  cfg.max_k = 3;
  cfg.max_w = 3;
  const VerifyResult res = run_verify(cfg);

  std::size_t random_or_planted = 0, errors = 0, kernels = 0;
  for (const CaseResult& c : res.cases) {
    random_or_planted += c.family == Family::Random || c.family == Family::Planted;
    errors += !c.error.empty();
    kernels += !c.early && c.error.empty();
  }
  const std::size_t bad = res.disagreements();
  std::ostringstream d1;
  d1 << res.cases.size() << " instances (" << random_or_planted << " random/planted), " << bad
     << " disagreements, tolerance exact";
  verdict(1, "kernel equivalence", bad == 0 && random_or_planted >= 2000, d1.str());

  // Every listed inequality must have been evaluated and never violated.
  const std::vector<std::string> required = {
      "|C_m| <= 8k^2+2k",
      "|C_g| <= 160k^4+248k^3+80k^2-16k-8",
      "C_g induces a forest (violations)",
      "I independent (edges inside I)",
      "N(v) subset of C_m for v in I (violations)",
      "N(v) double clique for v in I (missing double edges)",
      "max |N(v)| <= 2k+1 for v in I",
      "|I'| <= 8k^3+10k^2+3k+1",
      "|Q| <= 4k^2",
      "|Qhat| <= 8k^2",
      "|C_2| <= 8k^2-1",
      "max component |V(H)| <= 8k+8",
      "LCA closure |M'| <= 2|M| (worst tree)",
      "LCA closure residual neighbors <= 2",
  };
  std::map<std::string, std::pair<std::size_t, std::size_t>> seen;  // evaluated, violated
  std::size_t checks = 0, violations = 0;
  for (const CaseResult& c : res.cases)
    for (const BoundCheck& b : c.bounds.entries()) {
      auto& s = seen[b.name];
      ++s.first;
      ++checks;
      if (!b.satisfied) {
        ++s.second;
        ++violations;
      }
    }
  std::size_t bound_errors = 0;
  for (const CaseResult& c : res.cases) bound_errors += c.error.find("bound violated") != std::string::npos;
  std::string missing;
  for (const auto& name : required)
    if (!seen.count(name) || seen[name].first == 0) missing += " [" + name + "]";
  std::ostringstream d2;
  d2 << checks << " checks over " << kernels << " kernelizations, " << violations + bound_errors
     << " violations, " << errors << " internal errors";
  if (!missing.empty()) d2 << ", never evaluated:" << missing;
  verdict(2, "bound ledger", violations == 0 && bound_errors == 0 && errors == 0 && missing.empty() && kernels > 0,
          d2.str());
}

bool satisfies(const std::vector<Rational>& row, unsigned bits) {
  Rational sum = row.back();
  for (std::size_t j = 0; j + 1 < row.size(); ++j)
    if (bits >> j & 1) sum += row[j];
  return sum == 0;
}

void linear_equations() {
  std::mt19937_64 rng(7);
  const int systems = 500;
  std::size_t assignments = 0, failures_here = 0, oversize = 0;
  for (int t = 0; t < systems; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % 41);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 3);
    LinearSystem s;
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.emplace_back(static_cast<int>(rng() % 2));
      row.emplace_back(-1);
      s.add_row(std::move(row), i);
    }
    const LinearSystem kept = reduce_equations(s, k);
    if (kept.rows.size() > static_cast<std::size_t>((n + 1) * (k + 1))) ++oversize;
    std::vector<bool> is_kept(s.rows.size(), false);
    for (std::int64_t tag : kept.tags) is_kept[static_cast<std::size_t>(tag)] = true;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      ++assignments;
      int kept_bad = 0, dropped_bad = 0;
      for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const bool bad = !satisfies(s.rows[i], bits);
        (is_kept[i] ? kept_bad : dropped_bad) += bad;
      }
      if (kept_bad <= k && dropped_bad != 0) ++failures_here;
    }
  }
  std::ostringstream d;
  d << systems << " systems, " << assignments << " assignments, " << failures_here << " failures, " << oversize
    << " oversize kept sets, tolerance exact";
  verdict(3, "linear-equation lemma", failures_here == 0 && oversize == 0, d.str());
}

std::vector<MultiGraph> graph_suite() {
  std::vector<MultiGraph> suite;
  for (int n = 1; n <= 7; ++n)
    for (MultiGraph& g : enumerate_graphs(n, true)) suite.push_back(std::move(g));
  GenSpec spec;
  spec.family = Family::Random;
  spec.n_min = 2;
  spec.n_max = 9;
  spec.double_prob = 0.2;
  spec.seed = 99;
  for (std::uint64_t i = 0; i < 200; ++i) {
    spec.edge_prob = 0.2 + 0.05 * static_cast<double>(i % 8);
    suite.push_back(generate_one(spec, i).instance.graph);
  }
  return suite;
}

void flower_dichotomy(const std::vector<MultiGraph>& suite) {
  std::size_t runs = 0, wrong_branch = 0, bad_cover = 0, bad_flower = 0, errors = 0;
  for (const MultiGraph& g : suite)
    for (VertexId x : g.vertices()) {
      const int nu = exact_flower(g, x);
      for (std::int64_t k = 0; k <= 2; ++k) {
        ++runs;
        try {
          const FlowerOrCover r = flower_or_cover(g, x, k);
          if (r.is_flower() != (nu >= k + 1)) ++wrong_branch;
          if (r.is_flower()) {
            VertexSet used;
            bool ok = static_cast<std::int64_t>(r.flower.size()) >= k + 1;
            for (const Cycle& c : r.flower) {
              ok &= c.size() >= 2 && c.front() == x;
              if (c.size() == 2) ok &= g.multiplicity(x, c[1]) == 2;
              for (std::size_t i = 0; ok && c.size() > 2 && i < c.size(); ++i)
                ok &= g.multiplicity(c[i], c[(i + 1) % c.size()]) >= 1;
              for (std::size_t i = 1; i < c.size(); ++i) ok &= c[i] != x && used.insert(c[i]).second;
            }
            bad_flower += !ok;
          } else {
            const bool ok = static_cast<std::int64_t>(r.cover.size()) <= 2 * k && !r.cover.count(x) &&
                            avoids_cycles_through(delete_vertices(g, r.cover), x);
            bad_cover += !ok;
          }
        } catch (const std::exception&) {
          ++errors;
        }
      }
    }
  std::ostringstream d;
  d << suite.size() << " graphs, " << runs << " (graph, x, k) runs, " << wrong_branch << " wrong branches, "
    << bad_flower << " invalid flowers, " << bad_cover << " invalid covers, " << errors << " errors, tolerance exact";
  verdict(4, "flower dichotomy", wrong_branch + bad_flower + bad_cover + errors == 0, d.str());
}

void fvs_ratio(const std::vector<MultiGraph>& suite) {
  std::size_t invalid = 0, over = 0;
  double worst = 0;
  for (const MultiGraph& g : suite) {
    const VertexSet s = approx_fvs(g).fvs;
    const int opt = exact_fvs(g);
    invalid += !is_forest(delete_vertices(g, s));
    over += static_cast<int>(s.size()) > 2 * opt;
    if (opt > 0) worst = std::max(worst, static_cast<double>(s.size()) / opt);
  }
  std::ostringstream d;
  d << suite.size() << " graphs, " << invalid << " invalid, " << over << " above 2*OPT, worst ratio " << worst
    << ", tolerance exact";
  verdict(5, "FVS ratio", invalid == 0 && over == 0, d.str());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism(const std::string& cli) {
  const auto dir = std::filesystem::temp_directory_path() / ("wtds_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  // Different worker counts on purpose: the report must not depend on scheduling.
  const std::string base = "\"" + cli + "\" verify --seed 424242 --samples 1000 --quiet --report ";
  const int ra = std::system((base + "\"" + a.string() + "\" --threads 1").c_str());
  const int rb = std::system((base + "\"" + b.string() + "\" --threads 0").c_str());
  const std::string ta = slurp(a), tb = slurp(b);
  std::filesystem::remove_all(dir);
  std::ostringstream d;
  d << "two runs of verify --seed 424242 --samples 1000: exit " << ra << "/" << rb << ", " << ta.size() << "/"
    << tb.size() << " bytes, " << (ta == tb ? "identical" : "different");
  verdict(6, "determinism", ra == 0 && rb == 0 && !ta.empty() && ta == tb, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <wtds-cli>\n";
    return 64;
  }
  kernel_campaign();
  linear_equations();
  const auto suite = graph_suite();
  flower_dichotomy(suite);
  fvs_ratio(suite);
  determinism(argv[1]);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}

#include <gtest/gtest.h>

#include "support.hpp"

using namespace wtds;
using namespace wtds::test;

namespace {

// Exhaustive maximum matching by edge-subset recursion.
int brute_matching(const std::vector<Edge>& edges, std::size_t from, std::set<VertexId>& used) {
  int best = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (used.count(e.u) || used.count(e.v)) continue;
    used.insert(e.u);
    used.insert(e.v);
    best = std::max(best, 1 + brute_matching(edges, i + 1, used));
    used.erase(e.u);
    used.erase(e.v);
  }
  return best;
}

bool is_matching(const MultiGraph& g, const std::vector<Edge>& m) {
  VertexSet seen;
  for (const Edge& e : m) {
    if (g.multiplicity(e.u, e.v) == 0) return false;
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  }
  return true;
}

}  // namespace

TEST(Matching, SmallExamples) {
  EXPECT_EQ(max_matching(simple_graph(4, {{1, 2}, {2, 3}, {3, 4}})).size(), 2u);
  EXPECT_EQ(max_matching(cycle(3)).size(), 1u);
  EXPECT_EQ(max_matching(simple_graph(3, {})).size(), 0u);
}

TEST(Matching, PetersenIsPerfect) {
  const MultiGraph p = petersen();
  ASSERT_EQ(p.edge_count(), 15u);
  const auto m = max_matching(p);
  EXPECT_EQ(m.size(), 5u);
  EXPECT_TRUE(is_matching(p, m));
}

TEST(Matching, BlossomNeedsShrinking) {
  // A 5-cycle with a pendant on vertex 1 and another on vertex 3.
  const MultiGraph g = simple_graph(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {3, 7}});
  EXPECT_EQ(max_matching(g).size(), 3u);
}

TEST(Matching, DoubleEdgesCountOnce) {
  EXPECT_EQ(max_matching(graph(2, {{1, 2, 2}})).size(), 1u);
}

TEST(Matching, AgreesWithExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const MultiGraph g = random_multigraph(seed, n, 0.35, 0.2);
    std::set<VertexId> used;
    const auto m = max_matching(g);
    ASSERT_TRUE(is_matching(g, m)) << "seed " << seed;
    ASSERT_EQ(static_cast<int>(m.size()), brute_matching(g.edges(), 0, used)) << "seed " << seed;
  }
}

TEST(Matching, MissableVerticesAreTheDeficientSet) {
  // Path on 3 vertices: the ends can be left exposed by some maximum matching,
  // the middle cannot.
  IndexGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.finalize();
  BlossomMatcher m(g);
  m.solve();
  const auto d = m.missable_vertices();
  EXPECT_TRUE(d[0]);
  EXPECT_FALSE(d[1]);
  EXPECT_TRUE(d[2]);
}

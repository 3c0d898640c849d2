#include <gtest/gtest.h>

#include "support.hpp"

using namespace wtds;
using namespace wtds::test;

namespace {

bool oracle_yes(const Instance& inst) { return exact_tds(inst).decision == Decision::Yes; }

bool kernel_yes(const KernelReport& r) { return r.decided ? *r.decided == Decision::Yes : oracle_yes(r.kernel); }

}  // namespace

TEST(EncodeEquations, RowsFollowNeighborhoods) {
  // Hand-built decomposition: C_m = {1, 2, 3, 5}, I = {4, 6} with 4 ~ {2, 5}
  // and 6 ~ {2, 5}.
  Decomposition d;
  d.instance = unit_instance(graph(6, {{2, 5, 2}, {4, 2, 1}, {4, 5, 1}, {6, 2, 1}, {6, 5, 1}, {1, 2, 1}, {3, 5, 1}}), 2);
  d.c_m = {V(1), V(2), V(3), V(5)};
  d.i_set = {V(4), V(6)};
  const EquationEncoding e = encode_equations(d);
  EXPECT_EQ(e.variables, (std::vector<VertexId>{V(1), V(2), V(3), V(5)}));
  EXPECT_EQ(e.equations, (std::vector<VertexId>{V(4), V(6)}));
  const std::vector<Rational> expected{0, 1, 0, 1, -1};
  EXPECT_EQ(e.system.rows[0], expected);
  EXPECT_EQ(e.system.rows[1], expected);
  EXPECT_EQ(e.system.tags, (std::vector<std::int64_t>{4, 6}));
}

TEST(EncodeEquations, EmptyIAndOutsideNeighbor) {
  Decomposition d;
  d.instance = unit_instance(simple_graph(3, {{1, 2}, {2, 3}}), 1);
  d.c_m = {V(1), V(2)};
  EXPECT_TRUE(encode_equations(d).system.rows.empty());
  d.c_m = {V(1)};
  d.i_set = {V(2)};
  d.c_g = {V(3)};
  EXPECT_THROW(encode_equations(d), InvariantViolation);
}

TEST(Kernelize, NegativeBudget) {
  const KernelReport r = kernelize(unit_instance(complete(3), -1));
  ASSERT_TRUE(r.decided);
  EXPECT_EQ(*r.decided, Decision::No);
  EXPECT_TRUE(r.kernel.graph.empty());
}

TEST(Kernelize, TreeWithZeroBudgetIsYes) {
  const KernelReport r = kernelize(unit_instance(simple_graph(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}}), 0));
  EXPECT_TRUE(kernel_yes(r));
}

TEST(Kernelize, SmallExamplesMatchTheOracle) {
  const std::vector<Instance> cases{
      unit_instance(complete(3), 1),         unit_instance(complete(4), 1), unit_instance(complete(4), 2),
      unit_instance(butterfly(), 1),         unit_instance(petersen(), 3),  unit_instance(petersen(), 4),
      unit_instance(graph(3, {{1, 2, 2}, {2, 3, 1}}), 1),
      unit_instance(graph(3, {{1, 2, 2}, {2, 3, 2}}), 1),
  };
  for (const Instance& inst : cases) {
    const KernelReport r = kernelize(inst);
    EXPECT_EQ(kernel_yes(r), oracle_yes(inst));
    EXPECT_TRUE(r.bounds.all_satisfied());
  }
}

TEST(Kernelize, EquivalenceBoundsAndIdempotence) {
  GenSpec spec;
  spec.n_max = 12;
  spec.k_max = 3;
  spec.seed = 4242;
  int kernels = 0, dropped_i = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Instance inst = generate_one(spec, i).instance;
    const KernelReport r = kernelize(inst);
    ASSERT_EQ(kernel_yes(r), oracle_yes(inst)) << "instance " << i << "\n" << serialize_instance(inst);
    if (r.decided) continue;
    ++kernels;
    dropped_i += r.i_kept.size() < r.i_set.size();
    ASSERT_TRUE(r.bounds.all_satisfied());
    ASSERT_LE(r.kernel.graph.vertex_count(), r.c_m.size() + r.c_g.size() + r.i_kept.size());
    for (const auto& [v, w] : r.kernel.weight) ASSERT_LE(w, r.kernel.k + 1);

    const KernelReport again = kernelize(r.kernel);
    if (!again.decided) {
      ASSERT_LE(again.kernel.graph.vertex_count(), r.kernel.graph.vertex_count());
    }
  }
  EXPECT_GT(kernels, 200);
  std::cout << "[ info ] " << kernels << " kernels, " << dropped_i << " dropped I-vertices\n";
}

TEST(Kernelize, KernelFilesReparse) {
  GenSpec spec;
  spec.seed = 8;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const KernelReport r = kernelize(generate_one(spec, i).instance);
    if (r.decided) continue;
    const Instance back = parse_instance_string(serialize_instance(r.kernel));
    EXPECT_EQ(back.graph.vertex_count(), r.kernel.graph.vertex_count());
    EXPECT_EQ(back.graph.edge_count(), r.kernel.graph.edge_count());
    EXPECT_EQ(back.total_weight(), r.kernel.total_weight());
    EXPECT_NO_THROW(kernelize(back));
  }
}

TEST(Kernelize, ParallelPathBundles) {
  // Hubs 1 and 2 joined by t paths 1-v-2, plus a random tree on a few more
  // vertices hanging off the hubs. Many equal neighborhoods {1, 2} make a
  // heavy pair, contracted I-vertices and dropped equations.
  std::mt19937_64 rng(11);
  int dropped = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst;
    inst.k = static_cast<std::int64_t>(rng() % 4);
    const VertexId a = inst.add_vertex(1 + static_cast<Weight>(rng() % 3));
    const VertexId b = inst.add_vertex(1 + static_cast<Weight>(rng() % 3));
    const int t = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < t; ++i) {
      const VertexId v = inst.add_vertex(1 + static_cast<Weight>(rng() % 3));
      inst.graph.add_edge(a, v);
      inst.graph.add_edge(v, b);
    }
    const int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) {
      const auto vs = inst.graph.vertices();
      const VertexId v = inst.add_vertex(1 + static_cast<Weight>(rng() % 3));
      inst.graph.add_edge(v, vs[rng() % vs.size()]);
      if (rng() % 2) inst.graph.add_edge(v, vs[rng() % vs.size()]);
    }
    const KernelReport r = kernelize(inst);
    ASSERT_EQ(kernel_yes(r), oracle_yes(inst)) << "trial " << trial << "\n" << serialize_instance(inst);
    if (!r.decided) {
      ASSERT_TRUE(r.bounds.all_satisfied());
      dropped += r.i_kept.size() < r.i_set.size();
    }
  }
  EXPECT_GT(dropped, 10);
}

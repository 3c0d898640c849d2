#include <gtest/gtest.h>

#include "support.hpp"

using namespace wtds;
using namespace wtds::test;

TEST(MultiGraph, MultiplicitySaturatesAtTwo) {
  MultiGraph g = simple_graph(2, {});
  g.add_edge(V(1), V(2));
  g.add_edge(V(1), V(2));
  g.add_edge(V(1), V(2));
  EXPECT_EQ(g.multiplicity(V(1), V(2)), 2);
  EXPECT_EQ(g.degree(V(1)), 2);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_double_edge());
}

TEST(MultiGraph, RejectsSelfLoopAndUnknownVertex) {
  MultiGraph g = simple_graph(2, {});
  EXPECT_THROW(g.add_edge(V(1), V(1)), std::invalid_argument);
  EXPECT_THROW(g.add_edge(V(1), V(7)), std::invalid_argument);
}

TEST(MultiGraph, FreshIdsNeverReuseRemovedOnes) {
  MultiGraph g = simple_graph(3, {{1, 2}});
  g.remove_vertex(V(3));
  EXPECT_EQ(g.add_vertex(), V(4));
  EXPECT_EQ(g.multiplicity(V(1), V(2)), 1);
}

TEST(TreeChecks, DoubleEdgeIsACycle) {
  EXPECT_TRUE(is_tree(simple_graph(3, {{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_tree(graph(2, {{1, 2, 2}})));
  EXPECT_FALSE(is_forest(graph(3, {{1, 2, 2}})));
  EXPECT_FALSE(is_tree(simple_graph(3, {{1, 2}})));  // disconnected
  EXPECT_TRUE(is_forest(simple_graph(3, {{1, 2}})));
  EXPECT_FALSE(is_tree(MultiGraph{}));               // the empty graph is no tree
  EXPECT_TRUE(is_tree(simple_graph(1, {})));
}

TEST(TreeChecks, TreeDeletionSet) {
  const MultiGraph k4 = complete(4);
  EXPECT_FALSE(is_tree_deletion_set(k4, {V(1)}));
  EXPECT_TRUE(is_tree_deletion_set(k4, {V(1), V(2)}));
  EXPECT_FALSE(is_tree_deletion_set(k4, {V(1), V(2), V(3), V(4)}));
}

TEST(Components, OrderedByMinimumId) {
  const MultiGraph g = simple_graph(6, {{5, 6}, {1, 3}, {2, 4}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{V(1), V(3)}));
  EXPECT_EQ(comps[1], (std::vector<VertexId>{V(2), V(4)}));
  EXPECT_EQ(comps[2], (std::vector<VertexId>{V(5), V(6)}));
}

TEST(Contract, SumsWeightsAndKeepsNeighborhood) {
  // Path 1-2-3-4 with 5 hanging off 3; contract {2, 3}.
  const MultiGraph g = simple_graph(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}});
  WeightMap w{{V(1), 1}, {V(2), 2}, {V(3), 3}, {V(4), 1}, {V(5), 1}};
  const ContractResult c = contract_component(g, {V(2), V(3)}, w);
  EXPECT_EQ(c.weight, 5);
  EXPECT_EQ(c.graph.vertex_count(), 4u);
  EXPECT_EQ(c.graph.neighbors(c.vertex), (std::vector<VertexId>{V(1), V(4), V(5)}));
}

TEST(Contract, RefusesToHideACycle) {
  const MultiGraph g = simple_graph(3, {{1, 2}, {2, 3}, {3, 1}});
  WeightMap w{{V(1), 1}, {V(2), 1}, {V(3), 1}};
  EXPECT_THROW(contract_component(g, {V(2), V(3)}, w), InvariantViolation);
  EXPECT_THROW(contract_component(g, {}, w), std::invalid_argument);
  EXPECT_THROW(contract_component(g, {V(1), V(2), V(3)}, w), std::invalid_argument);
}

TEST(InstanceBasics, ValidateCatchesMismatch) {
  Instance inst = unit_instance(simple_graph(2, {{1, 2}}), 1);
  EXPECT_NO_THROW(inst.validate());
  inst.weight[V(2)] = 0;
  EXPECT_THROW(inst.validate(), std::invalid_argument);
  inst.weight.erase(V(2));
  EXPECT_THROW(inst.validate(), std::invalid_argument);
}

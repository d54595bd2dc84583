#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "plumb/plumb.hpp"

using namespace plumb;
using plumb::testing::eight_vertex_graph;
using plumb::testing::knot_7_5_graph;

namespace {

RootedTree chain_start() { return RootedTree(eight_vertex_graph(), {0, 1, 2, 3, 4, 6, 9}, 0); }

}  // namespace

TEST(Eta, SumOfDepths) {
  EXPECT_EQ(eta(chain_start()), 11u);
  EXPECT_EQ(eta(RootedTree(knot_7_5_graph(), {0, 5, 6}, 1)), 6u);
}

TEST(OffendingCoedges, OrderedByLcaDepthThenEndpoints) {
  const auto g = eight_vertex_graph();
  // coedges: v2-v6 (5, lca v), v4-v6 (7, lca v), v5-v7 (8, lca v)
  EXPECT_EQ(offending_coedges(g, chain_start()), (std::vector<EdgeId>{5, 7, 8}));
  EXPECT_TRUE(offending_coedges(g, RootedTree(g, {0, 2, 6, 5, 4, 8, 7}, 0)).empty());
}

TEST(SwapStep, RemovesShorterHalfEdge) {
  const auto g = eight_vertex_graph();
  SwapStep s;
  const auto next = swap_step(g, chain_start(), 5, &s);
  EXPECT_EQ(s.removed, 1u);
  EXPECT_EQ(s.inserted, 5u);
  EXPECT_EQ(s.eta_before, 11u);
  EXPECT_EQ(s.eta_after, 15u);
  EXPECT_EQ(next.root(), 0u);
  EXPECT_TRUE(next.contains(5));
  EXPECT_FALSE(next.contains(1));
  EXPECT_THROW(swap_step(g, chain_start(), 1), PreconditionError);
}

TEST(ConstructValidPair, EightVertexTrace) {
  const auto g = eight_vertex_graph();
  const auto trace = construct_valid_pair(g, chain_start());
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps[0].removed, 1u);
  EXPECT_EQ(trace.steps[0].inserted, 5u);
  EXPECT_EQ(trace.steps[1].removed, 3u);
  EXPECT_EQ(trace.steps[1].inserted, 7u);
  EXPECT_EQ(trace.steps[2].removed, 9u);
  EXPECT_EQ(trace.steps[2].inserted, 8u);
  EXPECT_EQ(trace.steps[0].eta_before, 11u);
  EXPECT_EQ(trace.steps[0].eta_after, 15u);
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    EXPECT_EQ(trace.steps[i].eta_before, trace.steps[i - 1].eta_after);
    EXPECT_GT(trace.steps[i].eta_after, trace.steps[i].eta_before);
  }
  EXPECT_EQ(trace.final_tree.edges(), (std::vector<EdgeId>{0, 2, 4, 5, 6, 7, 8}));
  EXPECT_TRUE(is_valid_pair(g, trace.final_tree));
  EXPECT_EQ(trace.initial, chain_start());
}

TEST(ConstructValidPair, AlreadyValidTreeIsUnchanged) {
  const auto g = knot_7_5_graph();
  const RootedTree t(g, {0, 5, 6}, 1);
  const auto trace = construct_valid_pair(g, t);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(trace.final_tree, t);
}

TEST(ConstructValidPair, SingleVertex) {
  const auto g = parse_graph("vertex a\n");
  const auto trace = construct_valid_pair(g);
  EXPECT_TRUE(trace.final_tree.edges().empty());
  EXPECT_TRUE(is_valid_pair(g, trace.final_tree));
}

TEST(SpanningTrees, SevenFiveCount) {
  const auto g = knot_7_5_graph();
  const auto trees = enumerate_spanning_trees(g);
  EXPECT_EQ(trees.size(), 17u);
  EXPECT_EQ(matrix_tree_count(g), 17);
  EXPECT_TRUE(std::is_sorted(trees.begin(), trees.end()));
  EXPECT_EQ(trees.front(), (std::vector<EdgeId>{0, 2, 5}));
  EXPECT_EQ(oracle::tree_count(g), 17u);
}

TEST(SpanningTrees, EightVertexCount) {
  const auto g = eight_vertex_graph();
  EXPECT_EQ(enumerate_spanning_trees(g).size(), oracle::tree_count(g));
  EXPECT_EQ(matrix_tree_count(g), oracle::tree_count(g));
}

TEST(SpanningTrees, CapAndDegenerateCases) {
  const auto g = knot_7_5_graph();
  EXPECT_THROW(enumerate_spanning_trees(g, 6), CapExceeded);
  EXPECT_EQ(enumerate_spanning_trees(g, 7).size(), 17u);
  const auto single = parse_graph("vertex a\n");
  EXPECT_EQ(enumerate_spanning_trees(single).size(), 1u);
  EXPECT_EQ(matrix_tree_count(single), 1);
  const auto split = parse_graph("vertex a\nvertex b\n");
  EXPECT_TRUE(enumerate_spanning_trees(split).empty());
  EXPECT_EQ(matrix_tree_count(split), 0);
}

TEST(SpanningTrees, BigCountsStayExact) {
  // 40 parallel edges between two vertices, plus a 2x30 bundle chain
  GraphBuilder b;
  for (int i = 0; i < 31; ++i) b.add_vertex("p" + std::to_string(i));
  for (int i = 0; i < 30; ++i) {
    for (int k = 0; k < 40; ++k) b.add_edge(i, i + 1, Sign::kPlus);
  }
  const auto g = b.build();
  TreeCount expect = 1;
  for (int i = 0; i < 30; ++i) expect *= 40;
  EXPECT_EQ(matrix_tree_count(g), expect);
}

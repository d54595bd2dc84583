#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plumb/plumb.hpp"

using namespace plumb;
using plumb::testing::eight_vertex_graph;
using plumb::testing::knot_7_5_graph;

namespace {

// Path tree b-a-d-c of the 7_5 graph, rooted at b.
RootedTree path_tree() { return RootedTree(knot_7_5_graph(), {0, 5, 6}, 1); }

}  // namespace

TEST(RootedTree, DepthsAndParents) {
  const auto t = path_tree();
  EXPECT_EQ(t.root(), 1u);
  EXPECT_EQ(t.depths(), (std::vector<std::size_t>{1, 0, 3, 2}));
  EXPECT_EQ(t.edge_depth(0), 1u);
  EXPECT_EQ(t.edge_depth(5), 2u);
  EXPECT_EQ(t.edge_depth(6), 3u);
  EXPECT_FALSE(t.parent(1));
  EXPECT_EQ(t.parent(2), 3u);
  EXPECT_EQ(t.parent_edge(3), 5u);
  EXPECT_TRUE(t.contains(6));
  EXPECT_FALSE(t.contains(1));
}

TEST(RootedTree, EdgesAreSorted) {
  const RootedTree t(knot_7_5_graph(), {6, 0, 5}, 1);
  EXPECT_EQ(t.edges(), (std::vector<EdgeId>{0, 5, 6}));
  EXPECT_EQ(t, path_tree());
}

TEST(RootedTree, RejectsNonTrees) {
  const auto g = knot_7_5_graph();
  EXPECT_THROW(RootedTree(g, {0, 1, 2}, 0), PreconditionError);  // cycle a-b-a
  EXPECT_THROW(RootedTree(g, {0, 5}, 0), PreconditionError);     // too few
  EXPECT_THROW(RootedTree(g, {0, 0, 5}, 0), PreconditionError);  // duplicate
  EXPECT_THROW(RootedTree(g, {0, 5, 9}, 0), PreconditionError);  // unknown id
  EXPECT_THROW(RootedTree(g, {0, 5, 6}, 7), PreconditionError);  // bad root
}

TEST(BfsTree, ScansIncidentEdgesInIdOrder) {
  const auto g = eight_vertex_graph();
  const auto t = bfs_tree(g, 0);
  EXPECT_EQ(t.edges(), (std::vector<EdgeId>{0, 1, 2, 3, 4, 5, 8}));
  EXPECT_THROW(bfs_tree(parse_graph("vertex a\nvertex b\n"), 0), PreconditionError);
}

TEST(DepthColoring, AlternatesByEdgeDepth) {
  const auto t = path_tree();
  const auto k = depth_coloring(t, 7);
  EXPECT_EQ(k[0], Sign::kMinus);
  EXPECT_EQ(k[5], Sign::kPlus);
  EXPECT_EQ(k[6], Sign::kMinus);
  const auto f = depth_coloring(t, 7, true);
  EXPECT_TRUE(f.flipped);
  for (EdgeId e : t.edges()) EXPECT_EQ(f[e], -k[e]);
}

TEST(Lca, PathAndStar) {
  const auto t = path_tree();
  EXPECT_EQ(lca(t, 2, 0), 0u);
  EXPECT_EQ(lca(t, 2, 2), 2u);
  const auto s = bfs_tree(eight_vertex_graph(), 0);
  EXPECT_EQ(lca(s, 5, 6), 2u);  // v5 and v6 both hang off v2
  EXPECT_EQ(lca(s, 7, 3), 0u);
}

TEST(FundamentalPath, OrderedFromFirstEndpoint) {
  const auto g = knot_7_5_graph();
  const auto t = path_tree();
  EXPECT_EQ(fundamental_path(g, t, 2), (std::vector<EdgeId>{0, 5, 6}));  // b to c
  EXPECT_EQ(fundamental_path(g, t, 1), (std::vector<EdgeId>{0}));
  EXPECT_THROW(fundamental_path(g, t, 5), PreconditionError);
  const auto g2 = parse_graph("vertex a\nvertex b\nvertex c\nvertex d\n"
                              "edge a b +\nedge c b +\nedge c d +\nedge d a -\n");
  const RootedTree t2(g2, {0, 1, 2}, 0);
  EXPECT_EQ(fundamental_path(g2, t2, 3), (std::vector<EdgeId>{2, 1, 0}));  // d to a
}

TEST(Alternation, Basics) {
  const std::vector<Sign> alt{Sign::kPlus, Sign::kMinus, Sign::kPlus};
  const std::vector<Sign> bad{Sign::kPlus, Sign::kPlus};
  EXPECT_TRUE(is_alternating(alt));
  EXPECT_FALSE(is_alternating(bad));
  EXPECT_TRUE(is_alternating(std::span<const Sign>{}));
}

TEST(PathSign, SumAndProduct) {
  const std::vector<Sign> s{Sign::kMinus, Sign::kPlus, Sign::kMinus};
  EXPECT_EQ(path_sign(s), Sign::kMinus);
  EXPECT_EQ(path_sign(s, PathSignRule::kProduct), Sign::kPlus);
  const std::vector<Sign> one{Sign::kPlus};
  EXPECT_EQ(path_sign(one), Sign::kPlus);
  const std::vector<Sign> even{Sign::kPlus, Sign::kMinus};
  EXPECT_THROW(path_sign(even), PreconditionError);
  EXPECT_THROW(path_sign(std::span<const Sign>{}), PreconditionError);
}

TEST(ValidPair, PathTreeIsValidStarIsNot) {
  const auto g = knot_7_5_graph();
  EXPECT_TRUE(is_valid_pair(g, path_tree()));
  EXPECT_EQ(coedges(g, path_tree()), (std::vector<EdgeId>{1, 2, 3, 4}));
  // tree {a-b, b-c, a-d} at root b: coedge d-c joins two children of b's subtrees
  const RootedTree t(g, {0, 2, 5}, 1);
  EXPECT_FALSE(is_valid_pair(g, t));
}

TEST(ValidPair, EquivalentToLcaCondition) {
  const auto g = eight_vertex_graph();
  for (const auto& edges : enumerate_spanning_trees(g)) {
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      const RootedTree t(g, edges, r);
      bool lca_ok = true;
      for (EdgeId e : coedges(g, t)) {
        const auto top = lca(t, g.edge(e).u, g.edge(e).v);
        lca_ok = lca_ok && (top == g.edge(e).u || top == g.edge(e).v);
      }
      EXPECT_EQ(is_valid_pair(g, t), lca_ok);
      const auto flipped = depth_coloring(t, g.edge_count(), true);
      bool flipped_ok = true;
      for (EdgeId e : coedges(g, t)) {
        flipped_ok = flipped_ok && is_alternating(fundamental_path(g, t, e), flipped);
      }
      EXPECT_EQ(is_valid_pair(g, t), flipped_ok);
    }
  }
}

TEST(SeifertStats, CanonicalGenus) {
  const auto s = seifert_stats(knot_7_5_graph(), 1);
  EXPECT_EQ(s.s, 4u);
  EXPECT_EQ(s.c, 7u);
  EXPECT_EQ(s.g_c, 2);
  const auto b = seifert_stats(induced_graph(plumb::testing::knot_7_5_word()), 1);
  EXPECT_EQ(b.g_c, 3);
  EXPECT_EQ(seifert_stats(eight_vertex_graph(), 2).g_c, 1);
  EXPECT_THROW(seifert_stats(eight_vertex_graph(), 1), PreconditionError);
  EXPECT_THROW(seifert_stats(knot_7_5_graph(), 0), PreconditionError);
  EXPECT_THROW(seifert_stats(knot_7_5_graph(), 7), PreconditionError);
}

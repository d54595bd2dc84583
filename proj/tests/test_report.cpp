#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plumb/plumb.hpp"

using namespace plumb;
using plumb::testing::b4_word;
using plumb::testing::eight_vertex_graph;
using plumb::testing::figure8_word;
using plumb::testing::knot_7_5_graph;
using plumb::testing::knot_7_5_word;

TEST(BraidReport, RowOrderAndValues) {
  const auto rep = braid_report(figure8_word(), "figure8");
  std::vector<std::string> names;
  for (const auto& r : rep.bounds) names.push_back(r.name);
  EXPECT_EQ(names, (std::vector<std::string>{"basket", "fp_braid", "fpbk_simple", "fpbk_signed",
                                             "fp_graph", "fpbk_graph", "fp_genus_upper",
                                             "fpbk_genus_upper"}));
  EXPECT_EQ(rep.row("basket")->value, 2);
  EXPECT_EQ(*rep.row("basket")->witness.rotation, 0u);
  EXPECT_FALSE(rep.row("fpbk_signed")->applicable);
  EXPECT_EQ(rep.stats.s, 3u);
  EXPECT_EQ(rep.stats.c, 4u);
  EXPECT_EQ(rep.stats.l, 1);
  EXPECT_EQ(rep.stats.g_c, 1);
  EXPECT_FALSE(rep.row("genus_lower"));
}

TEST(BraidReport, SevenFiveWithInsertionAndGenus) {
  const auto rep = braid_report(knot_7_5_word(), "7_5", {true, 2});
  EXPECT_EQ(rep.row("fpbk_simple")->value, 16);
  EXPECT_EQ(rep.row("fpbk_signed")->value, 8);
  EXPECT_EQ(rep.row("fp_braid")->value, 10);
  EXPECT_EQ(rep.stats.g_c, 3);
  EXPECT_EQ(rep.row("genus_lower")->value, 4);
  bool insertion_note = false;
  bool rotation_note = false;
  for (const auto& n : rep.notes) {
    insertion_note = insertion_note || n.find("1 2 -1 2 2 1 1 1 2 -2") != std::string::npos;
    rotation_note = rotation_note || n.find("rotation") != std::string::npos;
  }
  EXPECT_TRUE(insertion_note);
  EXPECT_TRUE(rotation_note);
}

TEST(BraidReport, SplitClosureMakesGraphRowsInapplicable) {
  const auto rep = braid_report(BraidWord{3, {1, 1}}, "split");
  EXPECT_FALSE(rep.row("fp_graph")->applicable);
  EXPECT_FALSE(rep.row("fp_genus_upper")->applicable);
  EXPECT_FALSE(rep.stats.g_c);
  EXPECT_TRUE(rep.any_applicable());
}

TEST(GraphReport, SevenFiveExhaustive) {
  GraphReportOptions opt;
  opt.exhaustive = true;
  const auto rep = graph_report(knot_7_5_graph(), "knot_7_5.graph", opt);
  EXPECT_EQ(rep.row("fpbk_graph_exhaustive")->value, 8);
  EXPECT_LE(rep.row("fp_graph_exhaustive")->value, 8);
  EXPECT_EQ(rep.stats.g_c, 2);
  const auto& w = rep.row("fpbk_graph_exhaustive")->witness;
  EXPECT_TRUE(w.root);
  EXPECT_TRUE(w.set_b);
  EXPECT_EQ(*w.gamma, static_cast<long>(w.set_b->size()));
}

TEST(GraphReport, PendantPruningMapsIdsBack) {
  GraphReportOptions opt;
  opt.exhaustive = true;
  opt.root = "v";
  const auto rep = graph_report(eight_vertex_graph(), "eight_vertex.graph", opt);
  EXPECT_EQ(rep.row("fpbk_graph_exhaustive")->value, 11);
  const auto& tree = *rep.row("fpbk_graph_exhaustive")->witness.tree_edges;
  EXPECT_EQ(std::count(tree.begin(), tree.end(), EdgeId{0}), 0);  // pendant edge v-v1
  for (EdgeId e : tree) EXPECT_LT(e, 10u);
  EXPECT_FALSE(rep.stats.l);
  EXPECT_FALSE(rep.row("fp_genus_upper")->applicable);

  opt.root = "v1";
  EXPECT_THROW(graph_report(eight_vertex_graph(), "x", opt), PreconditionError);
  opt.keep_pendants = true;
  EXPECT_NO_THROW(graph_report(eight_vertex_graph(), "x", opt));
  opt.root = "nope";
  EXPECT_THROW(graph_report(eight_vertex_graph(), "x", opt), PreconditionError);
}

TEST(GraphReport, ComponentsFlagEnablesGenusRows) {
  GraphReportOptions opt;
  opt.components = 2;
  const auto rep = graph_report(eight_vertex_graph(), "x", opt);
  EXPECT_EQ(rep.stats.g_c, 1);
  EXPECT_TRUE(rep.row("fp_genus_upper")->applicable);
  opt.components = 1;
  EXPECT_THROW(graph_report(eight_vertex_graph(), "x", opt), PreconditionError);
}

TEST(Json, ShapeAndNulls) {
  const auto j = to_json(braid_report(figure8_word(), "figure8"));
  EXPECT_EQ(j["input"], "figure8");
  EXPECT_EQ(j["stats"]["l"], 1);
  const auto& rows = j["bounds"];
  ASSERT_TRUE(rows.is_array());
  EXPECT_EQ(rows[0]["name"], "basket");
  EXPECT_EQ(rows[0]["value"], 2);
  EXPECT_EQ(rows[0]["witness"]["rotation"], 0);
  EXPECT_TRUE(rows[0]["witness"]["root"].is_null());
  EXPECT_TRUE(rows[3]["value"].is_null());
  EXPECT_FALSE(rows[3]["reason"].get<std::string>().empty());
  for (const char* key : {"root", "tree_edges", "flipped", "gamma", "delta", "set_B", "set_C",
                          "rotation"}) {
    EXPECT_TRUE(rows[5]["witness"].contains(key)) << key;
  }
  EXPECT_TRUE(j["notes"].is_array());
}

TEST(Text, TableLists) {
  const auto text = to_text(braid_report(b4_word(), "b4"));
  EXPECT_NE(text.find("fpbk_simple"), std::string::npos);
  EXPECT_NE(text.find("30"), std::string::npos);
  EXPECT_NE(text.find("rotation=0"), std::string::npos);
  EXPECT_NE(text.find("note: "), std::string::npos);
}

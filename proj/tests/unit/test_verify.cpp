#include <gtest/gtest.h>

#include "json.hpp"
#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/extremal.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/verify.hpp"

using namespace metriclab;

namespace {

SuiteConfig small(int nmax) {
  SuiteConfig c;
  c.nmax = nmax;
  return c;
}

}  // namespace

TEST(Verify, SuiteNames) {
  auto names = suite_names();
  EXPECT_EQ(names.size(), 13u);
  EXPECT_THROW(run_suite("nope", SuiteConfig{}), PreconditionError);
}

TEST(Verify, Prop8Small) {
  auto r = run_suite("prop8", small(5));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances, 31);
}

TEST(Verify, TreeBoundTen) {
  auto r = run_suite("tree_bound", small(10));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances + r.skipped, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
  EXPECT_EQ(r.skipped, 10);
  EXPECT_DOUBLE_EQ(r.max_ratio, 1.0);
}

TEST(Verify, TreeEqualityFlagsExactlyHairySpiders) {
  SuiteConfig c;
  Graph hs = gen_HS(6, 2).graph;
  c.graphs.push_back(hs);
  // Same order and diameter, one leaf moved next to the centre.
  for (int v = 0; v < hs.order(); ++v) {
    if (hs.degree(v) != 1) continue;
    Graph moved(hs.order());
    for (auto [a, b] : hs.edges())
      if (a != v && b != v) moved.add_edge(a, b);
    moved.add_edge(v, v == 0 ? 1 : 0);
    if (is_tree(moved) && diameter(moved) == 6) c.graphs.push_back(moved);
  }
  // At order 16 and diameter 6 only k = 2 can attain the bound.
  int expected = 0;
  for (const auto& g : c.graphs) expected += tree_code(g) == tree_code(hs);
  auto r = run_suite("tree_equality", c);
  EXPECT_TRUE(r.pass());
  ASSERT_FALSE(r.observations.empty());
  EXPECT_EQ(r.observations[0].quantity, "trees attaining equality");
  EXPECT_EQ(r.observations[0].measured, std::to_string(expected));
  EXPECT_GT(c.graphs.size(), 5u);
  EXPECT_LT(expected, static_cast<int>(c.graphs.size()));
}

TEST(Verify, DeterministicReports) {
  for (const char* suite : {"sauer_shelah", "mdvstc_sandwich", "extremal_specs"}) {
    SuiteConfig c = small(suite == std::string("sauer_shelah") ? 60 : 5);
    auto a = report_json(run_suite(suite, c), false);
    auto b = report_json(run_suite(suite, c), false);
    EXPECT_EQ(a, b);
    auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_FALSE(j.contains("elapsed"));
  }
}

TEST(Verify, SeedChangesSauerShelahInstances) {
  SuiteConfig a = small(40), b = small(40);
  b.seed = 7;
  auto ra = run_suite("sauer_shelah", a);
  auto rb = run_suite("sauer_shelah", b);
  EXPECT_TRUE(ra.pass());
  EXPECT_TRUE(rb.pass());
  EXPECT_NE(ra.notes, rb.notes);
}

TEST(Verify, FailuresCarryReplayableWitnesses) {
  auto r = run_suite("line_example", small(3));
  ASSERT_FALSE(r.pass());
  for (const auto& f : r.failures) {
    EXPECT_EQ(f.claim, "diameter 4");
    Graph g = parse_graph6(f.witness);
    EXPECT_EQ(diameter(g), 5);
  }
  EXPECT_TRUE(std::is_sorted(r.failures.begin(), r.failures.end(),
                             [](const SuiteFailure& a, const SuiteFailure& b) { return a.instance < b.instance; }));
}

TEST(Verify, ExplicitGraphsReplaceEnumeration) {
  SuiteConfig c;
  c.graphs = {complete_graph(3), path_graph(4), cycle_graph(5)};
  auto r = run_suite("prop8", c);
  EXPECT_EQ(r.instances, 3);
  c.graphs = {Graph(1), complete_graph(2), complete_graph(3)};
  auto small_dvc = run_suite("prop10", c);
  EXPECT_EQ(small_dvc.instances, 1);
  EXPECT_EQ(small_dvc.skipped, 2);
}

TEST(Verify, LargerOrdersNeedACorpus) {
  EXPECT_THROW(run_suite("prop8", small(8)), PreconditionError);
}

TEST(Verify, TableAndJson) {
  auto r = run_suite("grid_chain", small(3));
  EXPECT_TRUE(r.pass());
  auto table = report_table(r);
  EXPECT_NE(table.find("grid_chain"), std::string::npos);
  EXPECT_NE(table.find("PASS"), std::string::npos);
  auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["observations"].size(), 2u);
  EXPECT_TRUE(j.contains("elapsed"));
}

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/extremal.hpp"
#include "metriclab/graph.hpp"
#include "metriclab/graph_io.hpp"
#include "oracles.hpp"

using namespace metriclab;

TEST(Graph, AdjacencyIsSymmetricAndIrreflexive) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    for (int u = 0; u < g.order(); ++u) {
      EXPECT_FALSE(g.has_edge(u, u));
      for (int v : g.neighbors(u)) {
        EXPECT_TRUE(g.has_edge(v, u));
        EXPECT_GE(v, 0);
        EXPECT_LT(v, g.order());
      }
    }
  }
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_EQ(g.size(), 1u);
}

TEST(Distances, AgreeWithFloydWarshall) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(1 + trial % 8, 0.35, rng);
    auto dm = all_pairs_distances(g);
    auto fw = oracle::floyd_warshall(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        int expected = fw[u][v] >= oracle::kInf ? DistanceMatrix::kUnreachable : fw[u][v];
        ASSERT_EQ(dm(u, v), expected);
      }
  }
}

TEST(Distances, MetricAxioms) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected_graph(2 + trial % 9, 0.2, rng);
    auto dm = all_pairs_distances(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        EXPECT_EQ(dm(u, v), dm(v, u));
        EXPECT_EQ(dm(u, v) == 1, g.has_edge(u, v));
        for (int w = 0; w < g.order(); ++w) EXPECT_LE(dm(u, w), dm(u, v) + dm(v, w));
      }
  }
}

TEST(Distances, Examples) {
  auto p4 = all_pairs_distances(path_graph(4));
  EXPECT_EQ(p4(0, 3), 3);
  auto k5 = all_pairs_distances(complete_graph(5));
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) EXPECT_EQ(k5(u, v), u == v ? 0 : 1);
  EXPECT_EQ(all_pairs_distances(gen_HS(6, 2).graph).max_finite(), 6);
  EXPECT_EQ(diameter(cycle_graph(6)), 3);
  EXPECT_EQ(diameter(gen_O(7, 3).graph), 7);
  EXPECT_EQ(diameter(Graph(1)), 0);
}

TEST(Distances, DiameterRejectsDisconnected) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(diameter(g), PreconditionError);
}

TEST(Graph, TreesAndChordality) {
  EXPECT_TRUE(is_tree(gen_HS(8, 3).graph));
  EXPECT_FALSE(is_tree(cycle_graph(4)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_TRUE(is_chordal(complete_graph(5)));
  EXPECT_TRUE(is_chordal(gen_HS(6, 2).graph));
}

TEST(Graph, ChordalityMatchesInducedCycleSearch) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) EXPECT_EQ(is_chordal(g), !oracle::has_long_induced_cycle(g));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(7 + trial % 3, 0.45, rng);
    EXPECT_EQ(is_chordal(g), !oracle::has_long_induced_cycle(g)) << encode_graph6(g);
  }
}

TEST(Graph, LineGraph) {
  Graph l = line_graph(star_graph(4));
  EXPECT_EQ(l.order(), 4);
  EXPECT_EQ(l.size(), 6u);
  Graph lp = line_graph(path_graph(5));
  EXPECT_TRUE(oracle::isomorphic(lp, path_graph(4)));
}

TEST(Graph6, MatchesIndependentEncoder) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = oracle::random_graph(static_cast<int>(rng() % 33), 0.3, rng);
    std::string s = encode_graph6(g);
    ASSERT_EQ(s, oracle::graph6(g));
    ASSERT_EQ(parse_graph6(s), g);
    ASSERT_EQ(encode_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, LargeOrderHeader) {
  Graph g = path_graph(100);
  std::string s = encode_graph6(g);
  EXPECT_EQ(s, oracle::graph6(g));
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, Examples) {
  Graph k2 = parse_graph6(oracle::graph6(complete_graph(2)));
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.size(), 1u);
  Graph p4 = parse_graph6(encode_graph6(path_graph(4)));
  EXPECT_EQ(p4.size(), 3u);
  EXPECT_EQ(diameter(p4), 3);
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
}

TEST(Graph6, MalformedInputReportsOffset) {
  try {
    parse_graph6("C~x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D"), ParseError);
  EXPECT_THROW(parse_graph6("Bw?"), ParseError);
  EXPECT_THROW(parse_graph6("Bx"), ParseError);  // padding bit set
}

TEST(EdgeList, RoundTripAndErrors) {
  Graph g = gen_HS(4, 2).graph;
  EXPECT_EQ(parse_edge_list(encode_edge_list(g)), g);
  Graph h = parse_edge_list("# comment\n0 1\n1 2\n\n");
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(parse_edge_list("n 5\n0 1\n").order(), 5);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
}

TEST(GraphIO, AutoDetect) {
  EXPECT_EQ(parse_graph_auto("Bw\n"), complete_graph(3));
  EXPECT_EQ(parse_graph_auto("0 1\n1 2\n2 0\n"), complete_graph(3));
  std::istringstream in("Bw\n\nA_\n");
  auto gs = read_graph6_stream(in);
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1], complete_graph(2));
}

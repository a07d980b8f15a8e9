#include <gtest/gtest.h>

#include <random>

#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/extremal.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/hypergraph.hpp"
#include "metriclab/resolving.hpp"
#include "oracles.hpp"

using namespace metriclab;

TEST(Resolving, Examples) {
  EXPECT_TRUE(is_resolving(path_graph(5), std::vector<int>{0}));
  EXPECT_FALSE(is_resolving(path_graph(5), std::vector<int>{2}));
  EXPECT_FALSE(is_resolving(cycle_graph(4), std::vector<int>{0}));
  auto o73 = gen_O(7, 3);
  EXPECT_EQ(o73.spec.witness.size(), 3u);
  EXPECT_TRUE(is_resolving(o73.graph, o73.spec.witness));
}

TEST(Resolving, FullVertexSetResolves) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_connected_graph(1 + trial % 12, 0.3, rng);
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(is_resolving(g, all));
  }
}

TEST(Resolving, CertificateVectors) {
  Graph g = cycle_graph(5);
  auto c = certify_resolving(g, std::vector<int>{0, 1});
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.dimension, 2);
  auto fw = oracle::floyd_warshall(g);
  for (int v = 0; v < 5; ++v) {
    EXPECT_EQ(c.vectors[v][0], fw[v][0]);
    EXPECT_EQ(c.vectors[v][1], fw[v][1]);
  }
  EXPECT_THROW(certify_resolving(g, std::vector<int>{0}), PreconditionError);
}

TEST(MetricDimension, Examples) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(metric_dimension_exact(path_graph(n)).dimension, 1);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(metric_dimension_exact(complete_graph(n)).dimension, n - 1);
  auto hs = gen_HS(6, 2);
  auto c = metric_dimension_exact(hs.graph);
  EXPECT_EQ(c.dimension, 2);
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(metric_dimension_exact(Graph(1)).dimension, 0);
  EXPECT_EQ(metric_dimension_exact(cycle_graph(7)).dimension, 2);
  EXPECT_EQ(metric_dimension_exact(grid_graph(3, 4)).dimension, 2);
}

TEST(MetricDimension, MatchesNaiveSearch) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n))
      ASSERT_EQ(metric_dimension_exact(g).dimension, oracle::metric_dimension(g)) << encode_graph6(g);
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected_graph(7 + trial % 4, 0.25, rng);
    ASSERT_EQ(metric_dimension_exact(g).dimension, oracle::metric_dimension(g)) << encode_graph6(g);
  }
}

TEST(MetricDimension, CertificateIsMinimal) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected_graph(2 + trial % 12, 0.25, rng);
    auto c = metric_dimension_exact(g);
    EXPECT_EQ(c.dimension, static_cast<int>(c.set.size()));
    EXPECT_TRUE(is_resolving(g, c.set));
    for (std::size_t drop = 0; drop < c.set.size(); ++drop) {
      auto smaller = c.set;
      smaller.erase(smaller.begin() + static_cast<long>(drop));
      EXPECT_FALSE(is_resolving(g, smaller));
    }
  }
}

TEST(MetricDimension, Deterministic) {
  Graph g = gen_O(6, 3).graph;
  EXPECT_EQ(metric_dimension_exact(g).set, metric_dimension_exact(g).set);
}

TEST(MetricDimension, RejectsDisconnectedAndLarge) {
  EXPECT_THROW(metric_dimension_exact(Graph(2)), PreconditionError);
  EXPECT_THROW(metric_dimension_exact(path_graph(70)), InstanceTooLarge);
  EXPECT_EQ(metric_dimension_exact(path_graph(70), 70).dimension, 1);
}

TEST(TreeMetricDimension, Examples) {
  EXPECT_EQ(tree_metric_dimension(star_graph(3)).dimension, 2);
  EXPECT_EQ(tree_metric_dimension(path_graph(9)).dimension, 1);
  EXPECT_EQ(tree_metric_dimension(Graph(1)).dimension, 0);
  Graph hs = gen_HS(8, 3).graph;
  EXPECT_EQ(tree_metric_dimension(hs).dimension, 3);
  EXPECT_EQ(metric_dimension_exact(hs).dimension, 3);
  EXPECT_THROW(tree_metric_dimension(cycle_graph(4)), PreconditionError);
}

TEST(TreeMetricDimension, MatchesExactOnAllTrees) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& t : enumerate_trees(n)) {
      auto formula = tree_metric_dimension(t);
      ASSERT_EQ(formula.dimension, metric_dimension_exact(t).dimension) << encode_graph6(t);
      ASSERT_TRUE(is_resolving(t, formula.set));
    }
}

TEST(Conversions, ResolvingSetToTestCover) {
  Graph p3 = path_graph(3);
  auto balls = resolving_to_test_cover(p3, std::vector<int>{0});
  EXPECT_EQ(balls.size(), 3u);
  for (const auto& b : balls) EXPECT_EQ(b.center, 0);
  EXPECT_EQ(resolving_to_test_cover(complete_graph(2), std::vector<int>{0}).size(), 2u);
  EXPECT_EQ(resolving_to_test_cover(cycle_graph(5), std::vector<int>{0, 1}).size(), 5u);

  auto back = test_cover_to_resolving(p3, balls);
  EXPECT_EQ(back, std::vector<int>{0});
  std::vector<Ball> c5 = resolving_to_test_cover(cycle_graph(5), std::vector<int>{0, 1});
  auto centres = test_cover_to_resolving(cycle_graph(5), c5);
  EXPECT_EQ(centres.size(), 2u);
  EXPECT_TRUE(is_resolving(cycle_graph(5), centres));
  EXPECT_EQ(test_cover_to_resolving(Graph(1), std::vector<Ball>{{0, 0}}), std::vector<int>{0});
}

TEST(Conversions, BallsFormATestCover) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected_graph(2 + trial % 9, 0.3, rng);
    auto c = metric_dimension_exact(g);
    auto balls = resolving_to_test_cover(g, c.set);
    EXPECT_EQ(static_cast<int>(balls.size()), diameter(g) * c.dimension + 1);
    auto dm = all_pairs_distances(g);
    Hypergraph h(g.order());
    for (const auto& b : balls) h.add_edge(ball(dm, b.center, b.radius));
    std::vector<int> every(h.nedges());
    std::iota(every.begin(), every.end(), 0);
    EXPECT_TRUE(oracle::is_test_cover(h, every));
  }
}

#include <gtest/gtest.h>

#include <random>

#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/extremal.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/isomorphism.hpp"
#include "oracles.hpp"

using namespace metriclab;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return relabel(g, p);
}

}  // namespace

TEST(Isomorphism, Examples) {
  Graph g = gen_O(5, 2).graph;
  EXPECT_TRUE(isomorphic(g, g));
  EXPECT_FALSE(isomorphic(path_graph(4), star_graph(3)));
  EXPECT_FALSE(isomorphic(gen_HS(7, 2, 1).graph, gen_HS(7, 2, 0).graph));
}

TEST(Isomorphism, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + trial % 7;
    Graph g = oracle::random_graph(n, 0.5, rng);
    Graph h = trial % 2 ? shuffled(g, rng) : oracle::random_graph(n, 0.5, rng);
    bool expected = oracle::isomorphic(g, h);
    ASSERT_EQ(isomorphic(g, h), expected) << encode_graph6(g) << ' ' << encode_graph6(h);
    if (auto m = find_isomorphism(g, h)) {
      for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge((*m)[u], (*m)[v]));
    }
  }
}

TEST(Isomorphism, RelabelledCopiesOfLargeTrees) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_tree(20, rng);
    EXPECT_TRUE(isomorphic(g, shuffled(g, rng)));
  }
  Graph hs = gen_HS(7, 3, 1).graph;
  EXPECT_TRUE(isomorphic(hs, shuffled(hs, rng), hs.order()));
}

TEST(Isomorphism, EquivalenceOnPool) {
  auto pool = connected_graphs_up_to(5);
  std::mt19937_64 rng(13);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_TRUE(isomorphic(pool[i], shuffled(pool[i], rng)));
    for (std::size_t j = 0; j < pool.size(); ++j) {
      EXPECT_EQ(isomorphic(pool[i], pool[j]), i == j);
      EXPECT_EQ(isomorphic(pool[i], pool[j]), isomorphic(pool[j], pool[i]));
    }
  }
}

TEST(Isomorphism, CanonicalFormIsInvariant) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(1 + trial % 9, 0.4, rng);
    Graph h = shuffled(g, rng);
    EXPECT_EQ(canonical_graph6(g), canonical_graph6(h));
    Graph other = oracle::random_graph(g.order(), 0.4, rng);
    if (g.order() <= 7)
      EXPECT_EQ(canonical_graph6(g) == canonical_graph6(other), oracle::isomorphic(g, other));
  }
}

TEST(Isomorphism, Caps) {
  EXPECT_THROW(isomorphic(path_graph(21), path_graph(21)), InstanceTooLarge);
  EXPECT_THROW(canonical_graph6(path_graph(12)), InstanceTooLarge);
}

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/isomorphism.hpp"
#include "oracles.hpp"

using namespace metriclab;

TEST(Trees, Counts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
  for (int n = 1; n <= 16; ++n) ASSERT_EQ(enumerate_trees(n).size(), expected[n - 1]) << n;
  std::size_t upto12 = 0;
  for (int n = 1; n <= 12; ++n) upto12 += expected[n - 1];
  EXPECT_EQ(upto12, 987u);
  EXPECT_THROW(enumerate_trees(17), InstanceTooLarge);
}

TEST(Trees, PrueferAndWromAgree) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> a, b;
    for (const auto& t : enumerate_trees_pruefer(n)) a.insert(tree_code(t));
    for (const auto& t : enumerate_trees_wrom(n)) b.insert(tree_code(t));
    EXPECT_EQ(a, b) << n;
    EXPECT_EQ(a.size(), enumerate_trees_wrom(n).size());
  }
}

TEST(Trees, PairwiseNonIsomorphic) {
  for (int n = 1; n <= 8; ++n) {
    auto ts = enumerate_trees(n);
    for (const auto& t : ts) EXPECT_TRUE(is_tree(t));
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) EXPECT_FALSE(oracle::isomorphic(ts[i], ts[j]));
  }
}

TEST(Trees, CodeIsAnInvariant) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    Graph t = oracle::random_tree(1 + trial % 14, rng);
    std::vector<int> p(t.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(tree_code(t), tree_code(relabel(t, p)));
  }
  EXPECT_NE(tree_code(path_graph(4)), tree_code(star_graph(3)));
}

TEST(ConnectedGraphs, Counts) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) ASSERT_EQ(enumerate_connected_graphs(n).size(), expected[n - 1]) << n;
  EXPECT_EQ(connected_graphs_up_to(7).size(), 996u);
  EXPECT_THROW(enumerate_connected_graphs(8), InstanceTooLarge);
}

TEST(ConnectedGraphs, MatchNaiveDedup) {
  for (int n = 1; n <= 5; ++n) {
    // All labelled graphs, filtered to connected, deduplicated by brute force.
    std::vector<Graph> reps;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Graph g(n);
      int b = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
          if (mask >> b & 1) g.add_edge(u, v);
      if (!is_connected(g)) continue;
      bool fresh = true;
      for (const auto& r : reps) fresh = fresh && !oracle::isomorphic(r, g);
      if (fresh) reps.push_back(g);
    }
    auto ours = enumerate_connected_graphs(n);
    ASSERT_EQ(ours.size(), reps.size());
    std::set<std::string> a, b;
    for (const auto& g : ours) a.insert(canonical_graph6(g));
    for (const auto& g : reps) b.insert(canonical_graph6(g));
    EXPECT_EQ(a, b);
  }
}

TEST(ConnectedGraphs, RaisedCap) { EXPECT_EQ(enumerate_connected_graphs(8, 8).size(), 11117u); }

TEST(Corpus, ReadGraph6File) {
  std::string path = testing::TempDir() + "corpus.g6";
  {
    std::ofstream out(path);
    for (const auto& g : enumerate_connected_graphs(4)) out << encode_graph6(g) << '\n';
  }
  EXPECT_EQ(read_graph6_file(path).size(), 6u);
  std::remove(path.c_str());
  EXPECT_THROW(read_graph6_file(path), PreconditionError);
}

#include <gtest/gtest.h>

#include "metriclab/bounds.hpp"
#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/extremal.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/isomorphism.hpp"
#include "metriclab/minors.hpp"
#include "metriclab/resolving.hpp"
#include "oracles.hpp"

using namespace metriclab;

namespace {

void expect_minimum_witness(const Extremal& e) {
  ASSERT_TRUE(e.spec.metric_dimension.has_value());
  auto c = metric_dimension_exact(e.graph, std::max(64, e.graph.order()));
  EXPECT_EQ(c.dimension, *e.spec.metric_dimension) << e.spec.family;
  if (!e.spec.witness.empty()) {
    EXPECT_TRUE(is_resolving(e.graph, e.spec.witness));
    EXPECT_EQ(static_cast<int>(e.spec.witness.size()), c.dimension);
  }
}

}  // namespace

TEST(Comb, Orders) {
  EXPECT_EQ(gen_L(1).graph.order(), 2);
  EXPECT_EQ(gen_L(3).graph.order(), 7);
  EXPECT_EQ(gen_L(4).graph.order(), 11);
  for (int r = 1; r <= 8; ++r) {
    auto e = gen_L(r);
    EXPECT_TRUE(is_tree(e.graph));
    EXPECT_EQ(e.graph.order(), e.spec.order);
    EXPECT_EQ(e.graph.tagged("root").size(), 1u);
  }
  EXPECT_THROW(gen_L(0), PreconditionError);
}

TEST(HairySpider, Examples) {
  EXPECT_EQ(gen_HS(6, 2).graph.order(), 16);
  EXPECT_EQ(gen_HS(7, 2, 1).graph.order(), 20);
  EXPECT_EQ(metric_dimension_exact(gen_HS(7, 2, 0).graph).dimension, 3);
  expect_minimum_witness(gen_HS(6, 2));
  expect_minimum_witness(gen_HS(7, 2, 1));
  EXPECT_THROW(gen_HS(6, 1), PreconditionError);
  EXPECT_THROW(gen_HS(7, 2, 3), PreconditionError);
}

TEST(HairySpider, AttainTreeBound) {
  for (int d = 2; d <= 12; ++d)
    for (int k = 2; k <= 5; ++k) {
      std::vector<int> splits = d % 2 ? std::vector<int>{} : std::vector<int>{-1};
      for (int a = 1; d % 2 && a < k; ++a) splits.push_back(a);
      for (int a : splits) {
        auto e = gen_HS(d, k, a);
        ASSERT_TRUE(is_tree(e.graph));
        EXPECT_EQ(e.graph.order(), e.spec.order);
        EXPECT_EQ(BigInt(e.graph.order()), bound_tree(d, k).value) << d << ' ' << k << ' ' << a;
        EXPECT_EQ(diameter(e.graph), d);
        EXPECT_EQ(tree_metric_dimension(e.graph).dimension, k);
        EXPECT_TRUE(is_resolving(e.graph, e.spec.witness));
      }
    }
}

TEST(HairySpider, OddSplitsOutsideRangeNeedOneMore) {
  for (int d = 3; d <= 9; d += 2)
    for (int k = 2; k <= 4; ++k)
      for (int a : {0, k}) {
        auto e = gen_HS(d, k, a);
        EXPECT_EQ(tree_metric_dimension(e.graph).dimension, k + 1);
        EXPECT_EQ(diameter(e.graph), d);
      }
}

TEST(HairySpider, StrictlyBelowBoundForOtherTrees) {
  for (int n = 4; n <= 12; ++n)
    for (const auto& t : enumerate_trees(n)) {
      int k = tree_metric_dimension(t).dimension;
      if (k < 2) continue;
      int d = diameter(t);
      if (BigInt(n) != bound_tree(d, k).value) {
        EXPECT_LT(BigInt(n), bound_tree(d, k).value);
        continue;
      }
      bool match = false;
      if (d % 2 == 0) {
        match = isomorphic(t, gen_HS(d, k).graph);
      } else {
        for (int a = 1; a < k; ++a) match = match || isomorphic(t, gen_HS(d, k, a).graph);
      }
      EXPECT_TRUE(match) << encode_graph6(t);
    }
}

TEST(OuterplanarFamily, Examples) {
  EXPECT_EQ(gen_O(7, 3).graph.order(), 45);
  EXPECT_EQ(gen_O(8, 3).graph.order(), 62);
  auto o62 = gen_O(6, 2);
  EXPECT_TRUE(is_outerplanar(o62.graph));
  EXPECT_EQ(diameter(o62.graph), 6);
  EXPECT_EQ(metric_dimension_exact(o62.graph).dimension, 2);
  EXPECT_THROW(gen_O(3, 2), PreconditionError);
}

TEST(OuterplanarFamily, PredictionsHold) {
  for (int d = 4; d <= 8; ++d)
    for (int k = 2; k <= 4; ++k)
      for (bool chords : {false, true}) {
        auto e = gen_O(d, k, chords);
        EXPECT_EQ(e.graph.order(), o_order(d, k));
        EXPECT_EQ(e.graph.order(), e.spec.order);
        EXPECT_EQ(diameter(e.graph), d);
        EXPECT_TRUE(is_outerplanar(e.graph));
        EXPECT_LE(BigInt(e.graph.order()), bound_outerplanar(d, k).value);
        expect_minimum_witness(e);
      }
}

TEST(OuterplanarFamily, LargerDiametersKeepOrderAndDiameter) {
  for (int d = 9; d <= 12; ++d)
    for (int k = 2; k <= 5; ++k) {
      auto e = gen_O(d, k);
      EXPECT_EQ(e.graph.order(), o_order(d, k));
      EXPECT_EQ(diameter(e.graph), d);
      EXPECT_TRUE(is_resolving(e.graph, e.spec.witness));
    }
}

TEST(GridChain, Examples) {
  auto g2 = gen_grid_chain(2);
  EXPECT_EQ(g2.graph.order(), 8);
  EXPECT_EQ(diameter(g2.graph), 4);  // below the 4t = 8 of the closing remarks
  auto g3 = gen_grid_chain(3);
  EXPECT_EQ(g3.graph.order(), 27);
  EXPECT_EQ(diameter(g3.graph), 8);
  EXPECT_EQ(g3.spec.witness.size(), 3u);
  EXPECT_TRUE(is_resolving(g3.graph, g3.spec.witness));
  EXPECT_FALSE(has_clique_minor(g2.graph, 5));
  auto g4 = gen_grid_chain(4);
  EXPECT_EQ(g4.graph.order(), 64);
  EXPECT_TRUE(is_resolving(g4.graph, g4.spec.witness));
  EXPECT_EQ(metric_dimension_exact(g4.graph).dimension, 3);
}

TEST(LineExample, Examples) {
  EXPECT_EQ(line_example_order(2), 9);
  EXPECT_EQ(line_example_order(3), 22);
  for (int k = 2; k <= 5; ++k) {
    auto e = gen_line_example(k);
    EXPECT_EQ(e.graph.order(), line_example_order(k));
    EXPECT_EQ(static_cast<int>(e.spec.witness.size()), k);
    EXPECT_TRUE(is_resolving(e.graph, e.spec.witness));
  }
  EXPECT_THROW(gen_line_example(9), InstanceTooLarge);
}

TEST(LineExample, MeasuredDiameterIsFive) {
  for (int k = 2; k <= 5; ++k) EXPECT_EQ(diameter(gen_line_example(k).graph), 5);
}

TEST(Generators, WitnessesAreTagged) {
  auto e = gen_O(6, 3);
  std::vector<int> tagged = e.graph.tagged("witness");
  EXPECT_EQ(tagged, e.spec.witness);
  auto h = gen_HS(6, 3);
  EXPECT_EQ(h.graph.tagged("witness"), h.spec.witness);
}

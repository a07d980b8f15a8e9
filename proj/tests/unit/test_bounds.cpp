#include <gtest/gtest.h>

#include "metriclab/bounds.hpp"
#include "metriclab/error.hpp"

using namespace metriclab;

TEST(Bounds, Trivial) {
  EXPECT_EQ(bound_trivial(3, 2).value, 11);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(bound_trivial(1, k).value, 1 + k);
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(bound_trivial(d, 1).value, d + 1);
  EXPECT_THROW(bound_trivial(0, 1), PreconditionError);
}

TEST(Bounds, Hmmpsw) {
  EXPECT_EQ(bound_hmmpsw(3, 1).value, 4);
  EXPECT_EQ(bound_hmmpsw(1, 1).value, 2);
  EXPECT_EQ(bound_hmmpsw(6, 2).value, 33);
}

TEST(Bounds, HmmpswAtMostTrivial) {
  for (int d = 1; d <= 30; ++d)
    for (int k = 1; k <= 6; ++k) EXPECT_LE(bound_hmmpsw(d, k).value, bound_trivial(d, k).value) << d << ' ' << k;
}

TEST(Bounds, Tree) {
  EXPECT_EQ(bound_tree(6, 2).value, 16);
  EXPECT_EQ(bound_tree(7, 2).value, 20);
  EXPECT_EQ(bound_tree(8, 3).value, 35);
  EXPECT_THROW(bound_tree(6, 1), PreconditionError);
  for (int d = 2; d <= 40; ++d)
    for (int k = 2; k <= 10; ++k) EXPECT_GE(bound_tree(d, k).value, 1);
}

TEST(Bounds, TreeDecomposition) {
  EXPECT_EQ(bound_treedec(2, 2, 1, 1).value, 1458);
  EXPECT_EQ(bound_treedec(5, 3, 2, 0).value, 5 * 36);
  EXPECT_GE(bound_treedec(4, 2, 1, 1).value, bound_tree(4, 2).value);
  EXPECT_EQ(bound_treedec(4, 2, 1, 1).form, BoundValue::Form::proof_constant);
  EXPECT_EQ(bound_treedec_tw(4, 2, 1).value, bound_treedec(4, 2, 1, 4).value);
  EXPECT_EQ(bound_treedec_chordal(4, 2).value, bound_treedec(4, 2, 9, 1).value);
}

TEST(Bounds, MinorFree) {
  EXPECT_EQ(bound_minorfree(2, 2, 3).value, 26);
  for (int d = 1; d <= 5; ++d)
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(bound_minorfree(d, k, 2).value, d * k + 2);
  BigInt planar = 1;
  for (int i = 0; i < 4; ++i) planar *= 3 * 2 + 1;
  EXPECT_EQ(bound_minorfree(3, 2, 5).value, planar + 1);
}

TEST(Bounds, Rankwidth) {
  EXPECT_EQ(bound_rankwidth(1, 1, 0).value, 33);
  EXPECT_EQ(bound_rankwidth(1, 1, 1).value, 257);
  EXPECT_EQ(bound_rankwidth(3, 4, 5).value.str().size(), 328u);
}

TEST(Bounds, Outerplanar) {
  EXPECT_EQ(bound_outerplanar(7, 3).value, 204);
  EXPECT_EQ(bound_outerplanar(8, 3).value, 265);
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(bound_outerplanar(d, 1).value, d + 1);
}

TEST(Bounds, VcForms) {
  EXPECT_EQ(bound_tc_vc(2, 1).value, 3);
  EXPECT_EQ(bound_tc_vc(3, 2).value, 10);
  EXPECT_EQ(bound_md_vcdim(1, 1, 1).value, 3);
  EXPECT_EQ(bound_md_vcdim(2, 2, 2).value, 26);
  EXPECT_GE(bound_md_vcdim(1, 1, 1).value, 2);
}

TEST(Bounds, MonotoneInEachParameter) {
  for (int d = 2; d <= 9; ++d)
    for (int k = 2; k <= 5; ++k) {
      EXPECT_LE(bound_trivial(d, k).value, bound_trivial(d + 1, k).value);
      EXPECT_LE(bound_trivial(d, k).value, bound_trivial(d, k + 1).value);
      EXPECT_LE(bound_hmmpsw(d, k).value, bound_hmmpsw(d + 1, k).value);
      EXPECT_LE(bound_hmmpsw(d, k).value, bound_hmmpsw(d, k + 1).value);
      EXPECT_LE(bound_tree(d, k).value, bound_tree(d + 1, k).value);
      EXPECT_LE(bound_tree(d, k).value, bound_tree(d, k + 1).value);
      EXPECT_LE(bound_outerplanar(d, k).value, bound_outerplanar(d + 1, k).value);
      EXPECT_LE(bound_outerplanar(d, k).value, bound_outerplanar(d, k + 1).value);
      for (int w = 1; w <= 3; ++w)
        for (int l = 0; l <= 3; ++l) {
          auto b = bound_treedec(d, k, w, l).value;
          EXPECT_LE(b, bound_treedec(d + 1, k, w, l).value);
          EXPECT_LE(b, bound_treedec(d, k + 1, w, l).value);
          EXPECT_LE(b, bound_treedec(d, k, w + 1, l).value);
          EXPECT_LE(b, bound_treedec(d, k, w, l + 1).value);
        }
      for (int t = 2; t <= 5; ++t) {
        EXPECT_LE(bound_minorfree(d, k, t).value, bound_minorfree(d, k, t + 1).value);
        EXPECT_LE(bound_minorfree(d, k, t).value, bound_minorfree(d + 1, k, t).value);
      }
      for (int r = 0; r <= 2; ++r) EXPECT_LE(bound_rankwidth(d, k, r).value, bound_rankwidth(d, k, r + 1).value);
    }
}

TEST(Bounds, NamedEvaluation) {
  EXPECT_EQ(evaluate_bound("tree", {{"d", 6}, {"k", 2}}).value, 16);
  EXPECT_EQ(evaluate_bound("treedec", {{"d", 2}, {"k", 2}, {"w", 1}, {"l", 1}}).value, 1458);
  EXPECT_EQ(evaluate_bound("tc_vc", {{"tc", 3}, {"vc", 2}}).value, 10);
  EXPECT_THROW(evaluate_bound("tree", {{"d", 6}}), PreconditionError);
  EXPECT_THROW(evaluate_bound("nonsense", {}), PreconditionError);
  for (const auto& name : bound_names()) EXPECT_FALSE(name.empty());
}

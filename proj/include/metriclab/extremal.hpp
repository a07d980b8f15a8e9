#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metriclab/graph.hpp"

namespace metriclab {

// Parameters and predicted statistics of a generated family member.
// Witness vertices are also tagged "witness" on the graph.
struct ExtremalSpec {
  std::string family;  // L, HS_even, HS_odd, O, grid_chain, line_example
  std::map<std::string, int> params;
  long long order = 0;
  std::optional<int> diameter;
  std::optional<int> metric_dimension;
  std::vector<int> witness;  // predicted resolving set (may be empty)
};

struct Extremal {
  Graph graph;
  ExtremalSpec spec;
};

// Path v0..vr rooted at v0 (tagged "root") with a path of length r-i hung
// from each vi, 1 <= i < r.
Extremal gen_L(int r);

// Even d: k copies of L_{d/2} and a rooted path of length d/2 glued at one
// centre. Odd d: copies of L_{(d-1)/2} split a / k-a between the two ends
// u, w of an edge, each end also carrying a rooted path of length (d-1)/2.
// Pass a = -1 for even d.
Extremal gen_HS(int d, int k, int a = -1);

// Cycles with hanging paths glued at a common vertex x, plus a path at x.
// For odd d the two cycle neighbours of x in the largest cycle are always
// joined; with_chords adds the same chord to every other cycle of length
// at least 5. Requires d >= 4, k >= 2.
Extremal gen_O(int d, int k, bool with_chords = false);

// t copies of the t x t grid, consecutive copies joined at their top-left
// and at their top-right corners.
Extremal gen_grid_chain(int t);

// Line graph of k disjoint edges e_i and 2^k - 1 disjoint edges e'_I, with
// the first endpoint of e'_I joined to the first endpoint of each e_i,
// i in I.
Extremal gen_line_example(int k, int max_k = 8);

// Order formulas used for the predictions.
long long hs_order(int d, int k);
long long o_order(int d, int k);
long long line_example_order(int k);

}  // namespace metriclab

#pragma once

#include <string>
#include <vector>

#include "metriclab/graph.hpp"

namespace metriclab {

// Canonical bracket code of a tree rooted at its centre (or at its central
// edge). Two trees are isomorphic iff their codes are equal.
std::string tree_code(const Graph& tree);

// Free trees on exactly n vertices, one per isomorphism class, sorted by
// tree_code. Uses the Pruefer-based enumeration for n <= 9 and the
// Wright-Richmond-Odlyzko-McKay successor for larger n.
std::vector<Graph> enumerate_trees(int n, int max_n = 16);
// The two generators, exposed for cross-checking.
std::vector<Graph> enumerate_trees_pruefer(int n);
std::vector<Graph> enumerate_trees_wrom(int n);

// Connected graphs on exactly n vertices up to isomorphism, in canonical
// labelling, sorted by graph6. Each level extends the previous one by a
// vertex attached to every nonempty subset.
std::vector<Graph> enumerate_connected_graphs(int n, int max_n = 7);
// All connected graphs with 1..n_max vertices, by order.
std::vector<Graph> connected_graphs_up_to(int n_max, int max_n = 7);

// Reads a graph6 corpus file (one graph per line).
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace metriclab

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "metriclab/graph.hpp"

namespace metriclab {

// graph6: size header (1, 4 or 8 bytes) followed by the upper triangle in
// column-major order, packed big-endian into 6-bit groups offset by 63.
// An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Plain edge list: one "u v" pair per line, 0-indexed. Lines starting with
// '#' are comments. An optional first line "n N" fixes the vertex count;
// otherwise it is one more than the largest index seen.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

// Reads every non-empty graph6 line of a stream (one graph per line).
std::vector<Graph> read_graph6_stream(std::istream& in);

// Auto-detects edge-list vs graph6 for a single graph read from `text`.
Graph parse_graph_auto(std::string_view text);

}  // namespace metriclab

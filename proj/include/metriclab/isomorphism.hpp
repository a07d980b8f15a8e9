#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metriclab/graph.hpp"

namespace metriclab {

// Exact isomorphism test by colour refinement (seeded with degree and the
// sorted distance row) followed by backtracking. Throws InstanceTooLarge
// above `max_vertices`.
bool isomorphic(const Graph& g, const Graph& h, int max_vertices = 20);

// Returns a mapping m with g.has_edge(u,v) == h.has_edge(m[u],m[v]), if any.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, int max_vertices = 20);

// Canonical graph6 string: equal iff the graphs are isomorphic. Minimises the
// adjacency string over all orderings compatible with the refined partition,
// so it is only intended for small graphs (n <= 10).
std::string canonical_graph6(const Graph& g);

// Stable colour refinement of a single graph; colours are canonical (two
// isomorphic graphs receive the same colour multiset), numbered 0..c-1.
std::vector<int> refine_colours(const Graph& g);

}  // namespace metriclab

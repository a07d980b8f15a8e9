#pragma once

#include <optional>
#include <span>
#include <vector>

#include "metriclab/graph.hpp"

namespace metriclab {

// Branch sets of a minor model, in host vertex indices. Entry i is the
// branch set of pattern vertex i.
using MinorModel = std::vector<std::vector<int>>;

// Exhaustive K_t-minor search. Vertices of degree <= 1 are deleted and, for
// t >= 4, degree-2 vertices are suppressed; the remaining graph is split
// into biconnected blocks and each block with more than `block_cap`
// vertices raises InstanceTooLarge. The returned model is checked against
// the original graph.
std::optional<MinorModel> find_clique_minor(const Graph& g, int t, int block_cap = 14);
bool has_clique_minor(const Graph& g, int t, int block_cap = 14);

// Same search for K_{2,3}; branch sets 0,1 form the side of size two.
std::optional<MinorModel> find_k23_minor(const Graph& g, int block_cap = 14);

// No K_4 minor and no K_{2,3} minor.
bool is_outerplanar(const Graph& g, int block_cap = 14);

// True iff the sets are nonempty, pairwise disjoint, each induces a
// connected subgraph, and every pattern edge joins two adjacent sets.
bool is_minor_model(const Graph& g, const MinorModel& sets, std::span<const Edge> pattern_edges);

// Vertex sets of the biconnected components (bridges give 2-vertex blocks,
// isolated vertices give singleton blocks).
std::vector<std::vector<int>> biconnected_blocks(const Graph& g);

}  // namespace metriclab

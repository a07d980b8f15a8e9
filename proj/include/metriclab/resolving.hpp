#pragma once

#include <span>
#include <vector>

#include "metriclab/graph.hpp"
#include "metriclab/hypergraph.hpp"
#include "metriclab/set_cover.hpp"

namespace metriclab {

struct ResolvingCertificate {
  std::vector<int> set;
  int dimension = 0;
  // vectors[v][i] = d(v, set[i]).
  std::vector<std::vector<int>> vectors;
  bool verified = false;
};

// Distance vectors to s are pairwise distinct. Requires a connected graph.
bool is_resolving(const Graph& g, std::span<const int> s);
bool is_resolving(const DistanceMatrix& dm, std::span<const int> s);

// Builds the certificate for s and checks it; throws PreconditionError if s
// does not resolve g.
ResolvingCertificate certify_resolving(const Graph& g, std::span<const int> s);

// Minimum resolving set by set cover over vertex pairs. Deterministic.
ResolvingCertificate metric_dimension_exact(const Graph& g, int max_vertices = 64, SetCoverStats* stats = nullptr);

// Leaves minus exterior major vertices, with the usual leg-leaf witness.
// Paths have dimension 1, K_1 has dimension 0.
ResolvingCertificate tree_metric_dimension(const Graph& tree);

// Balls (x, r) for x in r_set and 0 <= r < d, plus one ball of radius d:
// d*|r_set| + 1 balls forming a test cover of the distance hypergraph.
std::vector<Ball> resolving_to_test_cover(const Graph& g, std::span<const int> r_set);

// Distinct centres of a test cover of the distance hypergraph; these
// resolve g.
std::vector<int> test_cover_to_resolving(const Graph& g, std::span<const Ball> cover);

}  // namespace metriclab

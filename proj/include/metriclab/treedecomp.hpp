#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metriclab/graph.hpp"

namespace metriclab {

// Bags of host vertices joined by tree edges over bag indices. The host is
// passed separately to the operations that need it.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  TreeDecomposition(std::vector<std::vector<int>> bags, std::vector<Edge> tree_edges);

  std::size_t nbags() const { return bags_.size(); }
  const std::vector<std::vector<int>>& bags() const { return bags_; }
  const std::vector<int>& bag(std::size_t i) const { return bags_[i]; }
  const std::vector<Edge>& tree_edges() const { return tree_edges_; }
  std::vector<std::vector<int>> tree_adjacency() const;

 private:
  std::vector<std::vector<int>> bags_;  // each sorted, no repeats
  std::vector<Edge> tree_edges_;
};

struct Violation {
  enum class Kind { range, tree, cover, edge, connectivity };
  Kind kind;
  std::string message;
  // cover: {vertex}; edge: {u, v}; connectivity: {vertex, bag X, bag Y, bag Z}
  // with X, Z containing the vertex and Y on the tree path between them.
  std::vector<int> witness;
};

const char* kind_name(Violation::Kind k);

std::vector<Violation> validate(const Graph& host, const TreeDecomposition& td);
bool is_valid(const Graph& host, const TreeDecomposition& td);

// Largest bag size minus one (-1 without bags).
int width(const TreeDecomposition& td);
// Largest host distance between two vertices of a common bag. Requires a
// valid decomposition of a connected host.
int length(const Graph& host, const TreeDecomposition& td);

bool is_reduced(const TreeDecomposition& td);
// Contracts tree edges whose one bag is contained in the other until no bag
// is contained in another. Width and length are unchanged.
TreeDecomposition reduce(const Graph& host, const TreeDecomposition& td);

// Maximal cliques from maximum cardinality search, joined by a maximum
// weight spanning tree on intersection sizes. Requires a chordal graph.
TreeDecomposition clique_tree(const Graph& g);

// Bag of v = v plus its later neighbours in the filled graph; the parent of
// v's bag is the bag of its earliest eliminated later neighbour.
TreeDecomposition decomposition_from_order(const Graph& g, std::span<const int> order);

struct TreewidthResult {
  int width = -1;
  std::vector<int> order;  // optimal elimination order
  TreeDecomposition decomposition;
};

// Branch and bound over elimination orders, memoised on the eliminated set.
TreewidthResult treewidth_exact(const Graph& g, int max_vertices = 18);

// Index of the first internal bag whose removal leaves the host connected,
// if any. Requires a valid reduced decomposition of a connected host.
std::optional<int> noncut_internal_bag(const Graph& host, const TreeDecomposition& td);
bool nonleaf_bags_are_cutsets(const Graph& host, const TreeDecomposition& td);

// PACE .td format: "s td NBAGS WIDTH+1 NVERTS", "b i v1 v2 ..." and tree
// edges "i j", all 1-indexed; lines starting with 'c' are comments.
struct PaceDecomposition {
  int nverts = 0;
  TreeDecomposition td;
};
PaceDecomposition parse_pace(std::string_view text);
std::string encode_pace(const TreeDecomposition& td, int nverts);

}  // namespace metriclab

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metriclab/bitset.hpp"

namespace metriclab {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Adjacency is kept both as
// bit rows and as sorted neighbour lists. Vertices may carry string tags
// (generators use them to mark roots and resolving-set witnesses).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return num_edges_; }

  // Adds uv. Loops and out-of-range endpoints throw PreconditionError;
  // returns false when the edge already exists.
  bool add_edge(int u, int v);
  // Appends an isolated vertex and returns its index.
  int add_vertex();

  bool has_edge(int u, int v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
  const Bitset& row(int v) const { return rows_[v]; }
  Bitset closed_row(int v) const {
    Bitset r = rows_[v];
    r.set(static_cast<std::size_t>(v));
    return r;
  }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  std::vector<Edge> edges() const;

  void add_tag(int v, std::string tag);
  bool has_tag(int v, std::string_view tag) const;
  std::span<const std::string> tags(int v) const { return tags_[v]; }
  std::vector<int> tagged(std::string_view tag) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<Bitset> rows_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<std::string>> tags_;
};

// Hop distances; kUnreachable for pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

  int order() const { return n_; }
  int operator()(int u, int v) const { return dist_[index(u, v)]; }
  int& at(int u, int v) { return dist_[index(u, v)]; }
  std::span<const int> row(int u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  bool connected() const;
  // Largest finite entry.
  int max_finite() const;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<int> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);
// Number of connected components of g minus `removed`.
int count_components(const Graph& g, const Bitset& removed);

// Throws PreconditionError on a disconnected graph.
int diameter(const Graph& g);
int diameter(const DistanceMatrix& dm);
// Throws PreconditionError unless g is connected.
void require_connected(const Graph& g, std::string_view what);

bool is_tree(const Graph& g);

// Maximum cardinality search; returns the visiting order (first visited
// first). Reversing it gives a perfect elimination order iff g is chordal.
std::vector<int> maximum_cardinality_search(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order);
bool is_chordal(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph line_graph(const Graph& g);
Graph relabel(const Graph& g, std::span<const int> perm);  // vertex v becomes perm[v]

// Named small graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);

}  // namespace metriclab

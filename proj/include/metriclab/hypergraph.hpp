#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metriclab/bitset.hpp"
#include "metriclab/graph.hpp"

namespace metriclab {

// Ball B(center, radius) of a graph.
struct Ball {
  int center = 0;
  int radius = 0;
  friend bool operator==(const Ball&, const Ball&) = default;
};

// Vertex set 0..nverts-1 with an ordered list of edges (repeats allowed).
// Hypergraphs built from balls carry one (center, radius) label per edge.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int nverts);
  Hypergraph(int nverts, const std::vector<std::vector<int>>& edges);

  int nverts() const { return nverts_; }
  std::size_t nedges() const { return edges_.size(); }
  const std::vector<Bitset>& edges() const { return edges_; }
  const Bitset& edge(std::size_t i) const { return edges_[i]; }

  void add_edge(Bitset e);
  void add_edge(const std::vector<int>& vertices);
  void add_ball(Bitset e, Ball label);

  bool labelled() const { return !labels_.empty(); }
  const std::vector<Ball>& labels() const { return labels_; }

  // Edges containing v, as a bitset over edge indices.
  Bitset incidence(int v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.nverts_ == b.nverts_ && a.edges_ == b.edges_;
  }

 private:
  int nverts_ = 0;
  std::vector<Bitset> edges_;
  std::vector<Ball> labels_;
};

// Keeps the first occurrence of every distinct edge (and its label).
Hypergraph dedup(const Hypergraph& h);

Bitset ball(const DistanceMatrix& dm, int center, int radius);

// All balls B(v, r), 0 <= r <= diameter, enumerated by center then radius.
// Identical balls are merged unless keep_duplicates is set. Requires a
// connected graph.
Hypergraph distance_hypergraph(const Graph& g, bool keep_duplicates = false);
// One ball of the given radius per vertex, in vertex order.
Hypergraph distance_hypergraph_fixed_radius(const Graph& g, int radius);
// Closed neighbourhoods, in vertex order.
Hypergraph closed_neighbourhood_hypergraph(const Graph& g);

// Projection onto x: vertex i of the result is x[i]; repeated traces are
// merged.
Hypergraph trace(const Hypergraph& h, std::span<const int> x);

// Incidence transpose: vertex i of the dual is edge i of h, and edge v of
// the dual is the set of edges containing v.
Hypergraph dual(const Hypergraph& h);

bool is_twin_free(const Hypergraph& h);
bool covers_all_vertices(const Hypergraph& h);
// Chosen edges cover every vertex and separate every pair.
bool is_test_cover(const Hypergraph& h, std::span<const int> edge_indices);

// Minimum test cover (sorted edge indices). Throws PreconditionError unless
// h is twin-free with every vertex in some edge.
std::vector<int> min_test_cover(const Hypergraph& h, int max_edges = 512);

struct ShatterWitness {
  enum class Mode { full, pairs };
  Mode mode = Mode::full;
  std::vector<int> set;
  // Realised subset (as vertices) and an edge whose trace on `set` is
  // exactly that subset. Full mode lists all 2^|set| subsets, pairs mode
  // lists the 2-subsets.
  std::vector<std::pair<std::vector<int>, int>> traces;
};

struct VcResult {
  int dimension = 0;  // -1 for a hypergraph without edges in full mode
  ShatterWitness witness;
};

bool is_shattered(const Hypergraph& h, std::span<const int> x);
bool is_2_shattered(const Hypergraph& h, std::span<const int> x);

VcResult vc_dimension(const Hypergraph& h, int max_vertices = 256);
VcResult vc2_dimension(const Hypergraph& h, int max_vertices = 96);

int dual_distance_vc(const Graph& g, int max_vertices = 256);
int dual_distance_2vc(const Graph& g, int max_vertices = 96);

struct Prop9Witness {
  int dual_vc = 0;
  std::vector<int> family;    // edges of h forming the shattered dual family
  std::vector<int> vertices;  // realising vertices of h, the empty pattern removed
  Hypergraph projected;       // every edge of h restricted to `vertices`
  int test_cover_size = 0;    // minimum test cover of `projected`
};

// Builds and verifies the projected witness of a maximum dual shattered
// family: 2^k - 1 vertices on which the family is a test cover and no test
// cover is smaller than k.
Prop9Witness prop9_witness(const Hypergraph& h, int max_vertices = 256);

// "p hyper NVERTS NEDGES" then one line per edge (0-indexed vertices; an
// empty line is an empty edge). Lines starting with 'c' or '#' before the
// header are comments.
Hypergraph parse_hypergraph(std::string_view text);
std::string encode_hypergraph(const Hypergraph& h);

}  // namespace metriclab

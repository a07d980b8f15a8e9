#include "metriclab/graph.hpp"

#include <algorithm>
#include <deque>

#include "metriclab/error.hpp"

namespace metriclab {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("graph order must be nonnegative");
  rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  adj_.resize(static_cast<std::size_t>(n));
  tags_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw PreconditionError("loops are not allowed (vertex " + std::to_string(u) + ")");
  if (has_edge(u, v)) return false;
  rows_[u].set(static_cast<std::size_t>(v));
  rows_[v].set(static_cast<std::size_t>(u));
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++num_edges_;
  return true;
}

int Graph::add_vertex() {
  Graph grown(n_ + 1);
  for (auto [u, v] : edges()) grown.add_edge(u, v);
  grown.tags_ = tags_;
  grown.tags_.emplace_back();
  *this = std::move(grown);
  return n_ - 1;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_tag(int v, std::string tag) {
  if (!has_tag(v, tag)) tags_[v].push_back(std::move(tag));
}

bool Graph::has_tag(int v, std::string_view tag) const {
  return std::find(tags_[v].begin(), tags_[v].end(), tag) != tags_[v].end();
}

std::vector<int> Graph::tagged(std::string_view tag) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (has_tag(v, tag)) out.push_back(v);
  return out;
}

bool DistanceMatrix::connected() const {
  return std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
}

int DistanceMatrix::max_finite() const {
  int best = 0;
  for (int d : dist_) best = std::max(best, d);
  return best;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kUnreachable);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (int s = 0; s < g.order(); ++s) {
    auto d = bfs_distances(g, s);
    for (int v = 0; v < g.order(); ++v) dm.at(s, v) = d[v];
  }
  return dm;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), DistanceMatrix::kUnreachable) == d.end();
}

int count_components(const Graph& g, const Bitset& removed) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack;
  int components = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s] || removed.test(static_cast<std::size_t>(s))) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (!seen[w] && !removed.test(static_cast<std::size_t>(w))) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

void require_connected(const Graph& g, std::string_view what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

int diameter(const DistanceMatrix& dm) {
  if (!dm.connected()) throw PreconditionError("diameter of a disconnected graph is undefined");
  return dm.max_finite();
}

int diameter(const Graph& g) { return diameter(all_pairs_distances(g)); }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

std::vector<int> maximum_cardinality_search(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    done[pick] = 1;
    order.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!done[w]) ++weight[w];
  }
  return order;
}

// `order` is an elimination order: each vertex's later neighbours must form
// a clique. Checked with the Tarjan-Yannakakis parent test.
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int parent = -1;
    for (int w : g.neighbors(v))
      if (pos[w] > i && (parent < 0 || pos[w] < pos[parent])) parent = w;
    if (parent < 0) continue;
    for (int w : g.neighbors(v))
      if (w != parent && pos[w] > i && !g.has_edge(parent, w)) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_order(g, order);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), index[w]);
    for (const auto& t : g.tags(vertices[i])) h.add_tag(static_cast<int>(i), t);
  }
  return h;
}

Graph line_graph(const Graph& g) {
  auto es = g.edges();
  Graph lg(static_cast<int>(es.size()));
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    incident[es[i].first].push_back(static_cast<int>(i));
    incident[es[i].second].push_back(static_cast<int>(i));
  }
  for (const auto& inc : incident)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) lg.add_edge(inc[a], inc[b]);
  return lg;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  for (int v = 0; v < g.order(); ++v)
    for (const auto& t : g.tags(v)) h.add_tag(perm[v], t);
  return h;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  return g;
}

}  // namespace metriclab

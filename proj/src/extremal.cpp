#include "metriclab/extremal.hpp"

#include "metriclab/error.hpp"

namespace metriclab {
namespace {

struct Builder {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<int, std::string>> tags;

  int vertex() { return n++; }
  void edge(int u, int v) { edges.emplace_back(u, v); }
  // Hangs a path with `length` edges from v; returns its far end.
  int path_from(int v, int length) {
    int cur = v;
    for (int i = 0; i < length; ++i) {
      int nxt = vertex();
      edge(cur, nxt);
      cur = nxt;
    }
    return cur;
  }
  // Copy of L_r rooted at `root`; returns v_r.
  int comb(int root, int r) {
    int cur = root;
    for (int i = 1; i <= r; ++i) {
      int vi = vertex();
      edge(cur, vi);
      cur = vi;
      if (i < r) path_from(vi, r - i);
    }
    return cur;
  }
  Graph build() const {
    Graph g = Graph::from_edges(n, edges);
    for (const auto& [v, t] : tags) g.add_tag(v, t);
    return g;
  }
};

void tag_witness(Extremal& e) {
  for (int v : e.spec.witness) e.graph.add_tag(v, "witness");
}

}  // namespace

long long hs_order(int d, int k) {
  long long num = d % 2 == 0 ? (1LL * k * d + 4) * (d + 2) : (1LL * k * d - k + 8) * (d + 1);
  return num / 8;
}

long long o_order(int d, int k) {
  long long s = 0;
  for (int i = 1; i <= d / 2; ++i) s += i;
  return d % 2 == 0 ? (d + 2) / 2 + k * (2 * s - 1) : (3LL * d + 3) / 2 + k * (2 * s - 1);
}

long long line_example_order(int k) {
  long long total = k + (1LL << k) - 1;
  long long binom = 1;
  for (int i = 1; i <= k; ++i) {
    binom = binom * (k - i + 1) / i;
    total += i * binom;
  }
  return total;
}

Extremal gen_L(int r) {
  if (r < 1) throw PreconditionError("L_r needs r >= 1");
  Builder b;
  int root = b.vertex();
  b.tags.emplace_back(root, "root");
  b.comb(root, r);
  Extremal e{b.build(), {}};
  e.spec.family = "L";
  e.spec.params = {{"r", r}};
  e.spec.order = 1 + r + 1LL * r * (r - 1) / 2;
  return e;
}

Extremal gen_HS(int d, int k, int a) {
  if (k < 2) throw PreconditionError("hairy spider needs k >= 2");
  Builder b;
  Extremal e;
  if (d % 2 == 0) {
    if (d < 2) throw PreconditionError("hairy spider needs d >= 2");
    if (a != -1) throw PreconditionError("the split parameter a applies to odd d only");
    const int r = d / 2;
    int centre = b.vertex();
    b.tags.emplace_back(centre, "root");
    for (int c = 0; c < k; ++c) e.spec.witness.push_back(b.comb(centre, r));
    b.path_from(centre, r);
    e.spec.family = "HS_even";
    e.spec.params = {{"d", d}, {"k", k}};
    e.spec.metric_dimension = k;
  } else {
    if (d < 3) throw PreconditionError("odd hairy spider needs d >= 3");
    if (a < 0 || a > k) throw PreconditionError("odd hairy spider needs 0 <= a <= k");
    const int r = (d - 1) / 2;
    int u = b.vertex();
    int w = b.vertex();
    b.edge(u, w);
    b.tags.emplace_back(u, "root");
    b.tags.emplace_back(w, "root");
    for (int c = 0; c < a; ++c) e.spec.witness.push_back(b.comb(u, r));
    b.path_from(u, r);
    for (int c = a; c < k; ++c) e.spec.witness.push_back(b.comb(w, r));
    b.path_from(w, r);
    e.spec.family = "HS_odd";
    e.spec.params = {{"d", d}, {"k", k}, {"a", a}};
    if (0 < a && a < k) {
      e.spec.metric_dimension = k;
    } else {
      e.spec.metric_dimension = k + 1;
      e.spec.witness.clear();
    }
  }
  e.graph = b.build();
  e.spec.order = hs_order(d, k);
  e.spec.diameter = d;
  tag_witness(e);
  return e;
}

Extremal gen_O(int d, int k, bool with_chords) {
  if (d < 4 || k < 2) throw PreconditionError("O_{d,k} needs d >= 4 and k >= 2");
  Builder b;
  Extremal e;
  int x = b.vertex();
  b.tags.emplace_back(x, "root");
  const int small = d / 2 - 1;
  const int large = (d + 1) / 2 - 1;
  std::vector<Edge> chord_slots;  // x's cycle neighbours, per copy
  std::vector<int> two_leaf;
  for (int copy = 0; copy < k; ++copy) {
    const int i = copy + 1 < k ? small : large;
    // Cycle x, c_1, ..., c_{2i}; c_j lies at distance min(j, 2i+1-j) from x.
    std::vector<int> c(static_cast<std::size_t>(2 * i + 1));
    c[0] = x;
    for (int j = 1; j <= 2 * i; ++j) {
      c[j] = b.vertex();
      b.edge(c[j - 1], c[j]);
    }
    b.edge(c[2 * i], x);
    for (int j = 1; j <= 2 * i; ++j) {
      int depth = std::min(j, 2 * i + 1 - j);
      b.path_from(c[j], i - depth + 1);
    }
    int second = b.vertex();
    b.edge(c[i], second);
    two_leaf.push_back(c[i]);
    e.spec.witness.push_back(second);
    if (i >= 2) chord_slots.emplace_back(c[1], c[2 * i]);
    if (copy + 1 == k && d % 2 == 1) b.edge(c[1], c[2 * i]);
  }
  b.path_from(x, d / 2);
  e.graph = b.build();

  if (with_chords) {
    std::vector<std::vector<int>> rows;
    for (int v : two_leaf) rows.push_back(bfs_distances(e.graph, v));
    for (auto [p, q] : chord_slots) {
      if (e.graph.has_edge(p, q)) continue;
      Graph trial = e.graph;
      trial.add_edge(p, q);
      bool keep = diameter(trial) == d;
      for (std::size_t s = 0; s < two_leaf.size() && keep; ++s)
        if (bfs_distances(trial, two_leaf[s]) != rows[s]) keep = false;
      if (keep) e.graph = std::move(trial);
    }
  }

  e.spec.family = "O";
  e.spec.params = {{"d", d}, {"k", k}, {"chords", with_chords ? 1 : 0}};
  e.spec.order = o_order(d, k);
  e.spec.diameter = d;
  e.spec.metric_dimension = k;
  tag_witness(e);
  return e;
}

Extremal gen_grid_chain(int t) {
  if (t < 2) throw PreconditionError("grid chain needs t >= 2");
  Builder b;
  auto id = [t](int copy, int row, int col) { return copy * t * t + row * t + col; };
  b.n = t * t * t;
  for (int g = 0; g < t; ++g)
    for (int r = 0; r < t; ++r)
      for (int c = 0; c < t; ++c) {
        if (c + 1 < t) b.edge(id(g, r, c), id(g, r, c + 1));
        if (r + 1 < t) b.edge(id(g, r, c), id(g, r + 1, c));
      }
  for (int g = 0; g + 1 < t; ++g) {
    b.edge(id(g, 0, 0), id(g + 1, 0, 0));
    b.edge(id(g, 0, t - 1), id(g + 1, 0, t - 1));
  }
  Extremal e{b.build(), {}};
  e.spec.family = "grid_chain";
  e.spec.params = {{"t", t}};
  e.spec.order = 1LL * t * t * t;
  e.spec.diameter = 4 * t;
  e.spec.witness = {id(0, 0, 0), id(0, 0, t - 1), id(t - 1, t - 1, 0)};
  tag_witness(e);
  return e;
}

Extremal gen_line_example(int k, int max_k) {
  if (k < 2) throw PreconditionError("line example needs k >= 2");
  if (k > max_k) throw InstanceTooLarge("line example k", k, max_k);
  Builder b;
  std::vector<int> first(static_cast<std::size_t>(k));
  std::vector<Edge> base;
  for (int i = 0; i < k; ++i) {
    first[i] = b.vertex();
    int second = b.vertex();
    b.edge(first[i], second);
    base.emplace_back(first[i], second);
  }
  for (int mask = 1; mask < (1 << k); ++mask) {
    int p = b.vertex();
    int q = b.vertex();
    b.edge(p, q);
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) b.edge(p, first[i]);
  }
  Graph root = b.build();
  auto es = root.edges();
  Extremal e{line_graph(root), {}};
  for (auto be : base)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (es[j] == be) e.spec.witness.push_back(static_cast<int>(j));
  e.spec.family = "line_example";
  e.spec.params = {{"k", k}};
  e.spec.order = line_example_order(k);
  e.spec.diameter = 4;
  e.spec.metric_dimension.reset();
  tag_witness(e);
  return e;
}

}  // namespace metriclab

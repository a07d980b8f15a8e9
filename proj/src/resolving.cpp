#include "metriclab/resolving.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "metriclab/error.hpp"

namespace metriclab {

bool is_resolving(const DistanceMatrix& dm, std::span<const int> s) {
  const int n = dm.order();
  for (int x : s)
    if (x < 0 || x >= n) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
  std::unordered_set<std::string> seen;
  seen.reserve(static_cast<std::size_t>(n));
  std::string key(s.size() * 2, '\0');
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      int d = dm(v, s[i]);
      key[2 * i] = static_cast<char>(d & 0xff);
      key[2 * i + 1] = static_cast<char>((d >> 8) & 0xff);
    }
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool is_resolving(const Graph& g, std::span<const int> s) {
  require_connected(g, "resolving set check");
  return is_resolving(all_pairs_distances(g), s);
}

ResolvingCertificate certify_resolving(const Graph& g, std::span<const int> s) {
  require_connected(g, "resolving set check");
  auto dm = all_pairs_distances(g);
  if (!is_resolving(dm, s)) throw PreconditionError("set does not resolve the graph");
  ResolvingCertificate c;
  c.set.assign(s.begin(), s.end());
  c.dimension = static_cast<int>(c.set.size());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> vec;
    for (int x : c.set) vec.push_back(dm(v, x));
    c.vectors.push_back(std::move(vec));
  }
  c.verified = true;
  return c;
}

ResolvingCertificate metric_dimension_exact(const Graph& g, int max_vertices, SetCoverStats* stats) {
  require_connected(g, "metric dimension");
  const int n = g.order();
  if (n > max_vertices) throw InstanceTooLarge("metric dimension vertex count", n, max_vertices);
  auto dm = all_pairs_distances(g);
  const std::size_t universe = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::vector<Bitset> cands;
  cands.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    Bitset c(universe);
    auto row = dm.row(x);
    std::size_t idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        if (row[u] != row[v]) c.set(idx);
    cands.push_back(std::move(c));
  }
  auto cover = min_set_cover(cands, universe, stats);
  if (!cover) throw Error("internal error: full vertex set does not resolve");
  return certify_resolving(g, *cover);
}

ResolvingCertificate tree_metric_dimension(const Graph& tree) {
  if (!is_tree(tree)) throw PreconditionError("tree metric dimension requires a tree");
  const int n = tree.order();
  if (n == 1) return certify_resolving(tree, {});
  bool path = tree.max_degree() <= 2;
  if (path) {
    for (int v = 0; v < n; ++v)
      if (tree.degree(v) == 1) {
        std::vector<int> s{v};
        return certify_resolving(tree, s);
      }
  }
  std::vector<int> set;
  for (int v = 0; v < n; ++v) {
    if (tree.degree(v) < 3) continue;
    std::vector<int> leg_leaves;
    for (int w : tree.neighbors(v)) {
      int prev = v;
      int cur = w;
      while (tree.degree(cur) == 2) {
        int nxt = tree.neighbors(cur)[0] == prev ? tree.neighbors(cur)[1] : tree.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
      }
      if (tree.degree(cur) == 1) leg_leaves.push_back(cur);
    }
    for (std::size_t i = 1; i < leg_leaves.size(); ++i) set.push_back(leg_leaves[i]);
  }
  std::sort(set.begin(), set.end());
  return certify_resolving(tree, set);
}

std::vector<Ball> resolving_to_test_cover(const Graph& g, std::span<const int> r_set) {
  require_connected(g, "resolving set conversion");
  auto dm = all_pairs_distances(g);
  if (!is_resolving(dm, r_set)) throw PreconditionError("set does not resolve the graph");
  const int d = diameter(dm);
  std::vector<Ball> out;
  for (int x : r_set)
    for (int r = 0; r < d; ++r) out.push_back({x, r});
  out.push_back({r_set.empty() ? 0 : r_set[0], d});

  Hypergraph h(g.order());
  for (auto b : out) h.add_ball(ball(dm, b.center, b.radius), b);
  std::vector<int> all(out.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  if (!is_test_cover(h, all)) throw Error("internal error: converted balls are not a test cover");
  return out;
}

std::vector<int> test_cover_to_resolving(const Graph& g, std::span<const Ball> cover) {
  require_connected(g, "test cover conversion");
  auto dm = all_pairs_distances(g);
  Hypergraph h(g.order());
  for (auto b : cover) {
    if (b.center < 0 || b.center >= g.order() || b.radius < 0)
      throw PreconditionError("ball outside the graph");
    h.add_ball(ball(dm, b.center, b.radius), b);
  }
  std::vector<int> all(cover.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  if (!is_test_cover(h, all)) throw PreconditionError("balls do not form a test cover");
  std::vector<int> centres;
  for (auto b : cover) centres.push_back(b.center);
  std::sort(centres.begin(), centres.end());
  centres.erase(std::unique(centres.begin(), centres.end()), centres.end());
  if (!is_resolving(dm, centres)) throw Error("internal error: ball centres do not resolve");
  return centres;
}

}  // namespace metriclab

#include "metriclab/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "metriclab/error.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/isomorphism.hpp"

namespace metriclab {
namespace {

std::string rooted_code(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

std::vector<int> centres(const Graph& t) {
  const int n = t.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

Graph pruefer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[x];
  Graph g(n);
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

// Level sequences (networkx's nonisomorphic_trees).
using Layout = std::vector<int>;

bool next_rooted_tree(const Layout& pred, Layout& out, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return false;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  out = pred;
  for (std::size_t i = static_cast<std::size_t>(p); i < out.size(); ++i) out[i] = out[i - p + q];
  return true;
}

std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

bool next_tree(const Layout& cand, Layout& out) {
  auto [left, rest] = split_tree(cand);
  int left_height = *std::max_element(left.begin(), left.end());
  int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) {
    out = cand;
    return true;
  }
  int p = static_cast<int>(left.size());
  Layout fresh;
  if (!next_rooted_tree(cand, fresh, p)) return false;
  if (cand[p] > 2) {
    auto [new_left, new_rest] = split_tree(fresh);
    int h = *std::max_element(new_left.begin(), new_left.end());
    std::size_t len = static_cast<std::size_t>(h + 1);
    for (std::size_t i = 0; i < len; ++i) fresh[fresh.size() - len + i] = static_cast<int>(i) + 1;
  }
  out = std::move(fresh);
  return true;
}

Graph layout_to_graph(const Layout& layout) {
  Graph g(static_cast<int>(layout.size()));
  std::vector<int> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      g.add_edge(stack.back(), static_cast<int>(i));
    }
    stack.push_back(static_cast<int>(i));
  }
  return g;
}

std::vector<Graph> sort_by_code(std::vector<Graph> trees) {
  std::vector<std::pair<std::string, Graph>> keyed;
  for (auto& t : trees) keyed.emplace_back(tree_code(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

std::vector<Graph> extend_connected(const std::vector<Graph>& level, int m) {
  std::set<std::string> seen;
  for (const auto& g : level)
    for (std::uint32_t mask = 1; mask < (1U << (m - 1)); ++mask) {
      Graph h(m);
      for (auto [u, v] : g.edges()) h.add_edge(u, v);
      for (int v = 0; v < m - 1; ++v)
        if ((mask >> v) & 1U) h.add_edge(v, m - 1);
      seen.insert(canonical_graph6(h));
    }
  std::vector<Graph> out;
  for (const auto& s : seen) out.push_back(parse_graph6(s));
  return out;
}

}  // namespace

std::string tree_code(const Graph& tree) {
  if (!is_tree(tree)) throw PreconditionError("tree code requires a tree");
  auto c = centres(tree);
  if (c.size() == 1) return rooted_code(tree, c[0], -1);
  std::string a = rooted_code(tree, c[0], c[1]);
  std::string b = rooted_code(tree, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return a + "-" + b;
}

std::vector<Graph> enumerate_trees_pruefer(int n) {
  if (n < 1) throw PreconditionError("tree order must be positive");
  if (n > 10) throw InstanceTooLarge("Pruefer tree enumeration", n, 10);
  if (n == 1) return {Graph(1)};
  if (n == 2) return {path_graph(2)};
  std::map<std::string, Graph> seen;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Graph g = pruefer_decode(seq, n);
    seen.emplace(tree_code(g), std::move(g));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_trees_wrom(int n) {
  if (n < 1) throw PreconditionError("tree order must be positive");
  if (n == 1) return {Graph(1)};
  if (n == 2) return {path_graph(2)};
  Layout layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  std::vector<Graph> out;
  while (true) {
    Layout valid;
    if (!next_tree(layout, valid)) break;
    out.push_back(layout_to_graph(valid));
    if (!next_rooted_tree(valid, layout)) break;
  }
  return sort_by_code(std::move(out));
}

std::vector<Graph> enumerate_trees(int n, int max_n) {
  if (n > max_n) throw InstanceTooLarge("tree enumeration order", n, max_n);
  return n <= 9 ? enumerate_trees_pruefer(n) : enumerate_trees_wrom(n);
}

std::vector<Graph> enumerate_connected_graphs(int n, int max_n) {
  if (n < 1) throw PreconditionError("graph order must be positive");
  if (n > max_n) throw InstanceTooLarge("connected graph enumeration order", n, max_n);
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) level = extend_connected(level, m);
  return level;
}

std::vector<Graph> connected_graphs_up_to(int n_max, int max_n) {
  if (n_max > max_n) throw InstanceTooLarge("connected graph enumeration order", n_max, max_n);
  std::vector<Graph> out;
  if (n_max < 1) return out;
  std::vector<Graph> level{Graph(1)};
  out.push_back(level[0]);
  for (int m = 2; m <= n_max; ++m) {
    level = extend_connected(level, m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open corpus file '" + path + "'");
  return read_graph6_stream(in);
}

}  // namespace metriclab

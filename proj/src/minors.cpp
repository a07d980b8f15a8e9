#include "metriclab/minors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "metriclab/error.hpp"

namespace metriclab {
namespace {

// Pattern graph with label classes of interchangeable vertices.
struct Pattern {
  int order = 0;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> adj;  // pattern adjacency masks
  std::vector<int> previous;       // previous label in the same class, or -1
};

Pattern clique_pattern(int t) {
  Pattern p;
  p.order = t;
  p.adj.assign(static_cast<std::size_t>(t), 0);
  for (int i = 0; i < t; ++i) {
    p.previous.push_back(i - 1);
    for (int j = i + 1; j < t; ++j) {
      p.edges.emplace_back(i, j);
      p.adj[i] |= 1U << j;
      p.adj[j] |= 1U << i;
    }
  }
  return p;
}

Pattern k23_pattern() {
  Pattern p;
  p.order = 5;
  p.adj.assign(5, 0);
  p.previous = {-1, 0, -1, 2, 3};
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) {
      p.edges.emplace_back(a, b);
      p.adj[a] |= 1U << b;
      p.adj[b] |= 1U << a;
    }
  return p;
}

// A graph whose vertices stand for disjoint connected sets of host vertices.
struct Piece {
  Graph g;
  std::vector<std::vector<int>> members;
};

Piece reduce(const Piece& in, bool suppress) {
  const int n = in.g.order();
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v].insert(in.g.neighbors(v).begin(), in.g.neighbors(v).end());
  auto members = in.members;
  std::vector<char> alive(static_cast<std::size_t>(n), 1);

  auto remove = [&](int v) {
    for (int w : adj[v]) adj[w].erase(v);
    adj[v].clear();
    alive[v] = 0;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (adj[v].size() <= 1) {
        remove(v);
        changed = true;
      } else if (suppress && adj[v].size() == 2) {
        int a = *adj[v].begin();
        int b = *std::next(adj[v].begin());
        if (!adj[a].count(b)) {
          members[a].insert(members[a].end(), members[v].begin(), members[v].end());
          adj[a].insert(b);
          adj[b].insert(a);
        }
        remove(v);
        changed = true;
      }
    }
  }

  std::vector<int> keep, index(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  Piece out{Graph(static_cast<int>(keep.size())), {}};
  for (int v : keep) {
    out.members.push_back(std::move(members[v]));
    for (int w : adj[v])
      if (index[w] > index[v]) out.g.add_edge(index[v], index[w]);
  }
  return out;
}

Piece sub_piece(const Piece& p, const std::vector<int>& vertices) {
  Piece out{induced_subgraph(p.g, vertices), {}};
  for (int v : vertices) out.members.push_back(p.members[v]);
  return out;
}

bool mask_connected(std::uint32_t mask, const std::vector<std::uint32_t>& rows) {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

// Partitions a connected block into pattern.order connected branch sets.
// Vertices are labelled in BFS order; a label may open only after the
// previous label of its class has opened. A branch set with no unlabelled
// neighbour is final and must already be connected and adjacent to all of
// its pattern neighbours.
std::optional<std::vector<std::uint32_t>> search_block(const Graph& g, const Pattern& pat) {
  const int m = g.order();
  const int t = pat.order;
  if (m < t) return std::nullopt;
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(m), 0);
  for (int v = 0; v < m; ++v)
    for (int w : g.neighbors(v)) rows[v] |= 1U << w;

  std::vector<int> order;
  {
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    seen[0] = 1;
    order.push_back(0);
    for (std::size_t h = 0; h < order.size(); ++h)
      for (int w : g.neighbors(order[h]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    if (static_cast<int>(order.size()) != m) return std::nullopt;
  }

  std::vector<std::uint32_t> part(static_cast<std::size_t>(t), 0);
  std::uint32_t unassigned = m == 32 ? ~0U : ((1U << m) - 1);

  auto neighbourhood = [&](std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::uint32_t f = mask; f; f &= f - 1) out |= rows[std::countr_zero(f)];
    return out & ~mask;
  };
  auto final_ok = [&](int l) {
    if (!mask_connected(part[l], rows)) return false;
    std::uint32_t nb = neighbourhood(part[l]);
    for (std::uint32_t f = pat.adj[l]; f; f &= f - 1) {
      int l2 = std::countr_zero(f);
      if ((nb & part[l2]) == 0) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int p) -> bool {
    if (p == m) {
      for (int l = 0; l < t; ++l)
        if (part[l] == 0 || !final_ok(l)) return false;
      return true;
    }
    int v = order[p];
    for (int l = 0; l < t; ++l) {
      if (part[l] == 0 && pat.previous[l] >= 0 && part[pat.previous[l]] == 0) continue;
      part[l] |= 1U << v;
      unassigned &= ~(1U << v);
      bool ok = true;
      int unopened = 0;
      for (int q = 0; q < t && ok; ++q) {
        if (part[q] == 0) {
          ++unopened;
          continue;
        }
        if ((neighbourhood(part[q]) & unassigned) == 0 && !final_ok(q)) ok = false;
      }
      if (ok && unopened > std::popcount(unassigned)) ok = false;
      if (ok && rec(p + 1)) return true;
      part[l] &= ~(1U << v);
      unassigned |= 1U << v;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return part;
}

std::optional<MinorModel> solve(const Piece& input, const Pattern& pat, bool suppress, int cap) {
  Piece p = reduce(input, suppress);
  const int t = pat.order;
  if (p.g.order() < t) return std::nullopt;
  auto blocks = biconnected_blocks(p.g);
  if (blocks.size() == 1 && static_cast<int>(blocks[0].size()) == p.g.order()) {
    if (p.g.order() > cap || p.g.order() > 31) throw InstanceTooLarge("minor search block", p.g.order(), cap);
    if (p.g.size() < pat.edges.size()) return std::nullopt;
    auto parts = search_block(p.g, pat);
    if (!parts) return std::nullopt;
    MinorModel model(static_cast<std::size_t>(t));
    for (int l = 0; l < t; ++l) {
      for (std::uint32_t f = (*parts)[l]; f; f &= f - 1) {
        const auto& mem = p.members[std::countr_zero(f)];
        model[l].insert(model[l].end(), mem.begin(), mem.end());
      }
      std::sort(model[l].begin(), model[l].end());
    }
    return model;
  }
  for (const auto& block : blocks) {
    if (static_cast<int>(block.size()) < t) continue;
    if (auto found = solve(sub_piece(p, block), pat, suppress, cap)) return found;
  }
  return std::nullopt;
}

Piece whole(const Graph& g) {
  Piece p{Graph(g.order()), {}};
  for (auto [u, v] : g.edges()) p.g.add_edge(u, v);
  for (int v = 0; v < g.order(); ++v) p.members.push_back({v});
  return p;
}

std::optional<MinorModel> checked(const Graph& g, std::optional<MinorModel> model, const Pattern& pat) {
  if (model && !is_minor_model(g, *model, pat.edges))
    throw Error("internal error: minor witness failed verification");
  return model;
}

}  // namespace

std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::set<int> block;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == Edge{u, w}) break;
          }
          blocks.emplace_back(block.begin(), block.end());
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[v] = timer++;
      blocks.push_back({v});
      continue;
    }
    dfs(v, -1);
  }
  return blocks;
}

bool is_minor_model(const Graph& g, const MinorModel& sets, std::span<const Edge> pattern_edges) {
  const int n = g.order();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    for (int v : sets[i]) {
      if (v < 0 || v >= n || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<int> seen{sets[i][0]};
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    mark[sets[i][0]] = 1;
    for (std::size_t h = 0; h < seen.size(); ++h)
      for (int w : g.neighbors(seen[h]))
        if (!mark[w] && owner[w] == static_cast<int>(i)) {
          mark[w] = 1;
          seen.push_back(w);
        }
    if (seen.size() != sets[i].size()) return false;
  }
  for (auto [a, b] : pattern_edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(sets.size()) || b >= static_cast<int>(sets.size())) return false;
    bool joined = false;
    for (int v : sets[a] ) {
      for (int w : g.neighbors(v))
        if (owner[w] == b) {
          joined = true;
          break;
        }
      if (joined) break;
    }
    if (!joined) return false;
  }
  return true;
}

std::optional<MinorModel> find_clique_minor(const Graph& g, int t, int block_cap) {
  if (t < 0) throw PreconditionError("minor order must be nonnegative");
  if (t == 0) return MinorModel{};
  if (t > g.order()) return std::nullopt;
  if (t == 1) return MinorModel{{0}};
  if (t == 2) {
    auto es = g.edges();
    if (es.empty()) return std::nullopt;
    return MinorModel{{es[0].first}, {es[0].second}};
  }
  if (t > 31) throw InstanceTooLarge("clique minor order", t, 31);
  Pattern pat = clique_pattern(t);
  return checked(g, solve(whole(g), pat, t >= 4, block_cap), pat);
}

bool has_clique_minor(const Graph& g, int t, int block_cap) { return find_clique_minor(g, t, block_cap).has_value(); }

std::optional<MinorModel> find_k23_minor(const Graph& g, int block_cap) {
  Pattern pat = k23_pattern();
  return checked(g, solve(whole(g), pat, false, block_cap), pat);
}

bool is_outerplanar(const Graph& g, int block_cap) {
  return !has_clique_minor(g, 4, block_cap) && !find_k23_minor(g, block_cap).has_value();
}

}  // namespace metriclab

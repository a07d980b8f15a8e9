#include "metriclab/treedecomp.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "metriclab/error.hpp"

namespace metriclab {

TreeDecomposition::TreeDecomposition(std::vector<std::vector<int>> bags, std::vector<Edge> tree_edges)
    : bags_(std::move(bags)), tree_edges_(std::move(tree_edges)) {
  for (auto& b : bags_) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
}

std::vector<std::vector<int>> TreeDecomposition::tree_adjacency() const {
  std::vector<std::vector<int>> adj(bags_.size());
  for (auto [a, b] : tree_edges_) {
    if (a < 0 || b < 0 || a >= static_cast<int>(bags_.size()) || b >= static_cast<int>(bags_.size())) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

const char* kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::range: return "range";
    case Violation::Kind::tree: return "tree";
    case Violation::Kind::cover: return "P1";
    case Violation::Kind::edge: return "P2";
    case Violation::Kind::connectivity: return "P3";
  }
  return "?";
}

namespace {

bool tree_ok(const TreeDecomposition& td, std::string& why) {
  const int m = static_cast<int>(td.nbags());
  if (m == 0) {
    why = "decomposition has no bags";
    return false;
  }
  if (static_cast<int>(td.tree_edges().size()) != m - 1) {
    why = "tree has " + std::to_string(td.tree_edges().size()) + " edges for " + std::to_string(m) + " bags";
    return false;
  }
  for (auto [a, b] : td.tree_edges())
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) {
      why = "tree edge " + std::to_string(a) + " " + std::to_string(b) + " is invalid";
      return false;
    }
  auto adj = td.tree_adjacency();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
  }
  if (reached != m) {
    why = "tree edges do not connect all bags";
    return false;
  }
  return true;
}

bool bag_has(const std::vector<int>& bag, int v) { return std::binary_search(bag.begin(), bag.end(), v); }

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Violation> validate(const Graph& host, const TreeDecomposition& td) {
  std::vector<Violation> out;
  const int n = host.order();
  for (std::size_t i = 0; i < td.nbags(); ++i)
    for (int v : td.bag(i))
      if (v < 0 || v >= n) {
        out.push_back({Violation::Kind::range, "bag " + std::to_string(i) + " holds vertex " + std::to_string(v) +
                                                   " outside the host",
                       {static_cast<int>(i), v}});
        return out;
      }

  std::string why;
  bool tree = n == 0 && td.nbags() == 0 ? true : tree_ok(td, why);
  if (!tree) out.push_back({Violation::Kind::tree, why, {}});

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < td.nbags(); ++i)
    for (int v : td.bag(i)) holders[v].push_back(static_cast<int>(i));
  for (int v = 0; v < n; ++v)
    if (holders[v].empty()) out.push_back({Violation::Kind::cover, "vertex " + std::to_string(v) + " is in no bag", {v}});

  for (auto [u, v] : host.edges()) {
    bool found = false;
    for (int b : holders[u])
      if (bag_has(td.bag(static_cast<std::size_t>(b)), v)) {
        found = true;
        break;
      }
    if (!found)
      out.push_back({Violation::Kind::edge, "edge " + std::to_string(u) + " " + std::to_string(v) + " is in no bag", {u, v}});
  }

  if (!tree) return out;
  auto adj = td.tree_adjacency();
  const int m = static_cast<int>(td.nbags());
  for (int v = 0; v < n; ++v) {
    if (holders[v].size() < 2) continue;
    // Grow the subtree of bags holding v from the first holder.
    std::vector<char> in(static_cast<std::size_t>(m), 0);
    for (int b : holders[v]) in[b] = 1;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> stack{holders[v][0]};
    seen[holders[v][0]] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a])
        if (in[b] && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
    }
    int z = -1;
    for (int b : holders[v])
      if (!seen[b]) {
        z = b;
        break;
      }
    if (z < 0) continue;
    int x = holders[v][0];
    std::vector<int> parent(static_cast<std::size_t>(m), -1);
    std::vector<int> queue{x};
    parent[x] = x;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int b : adj[queue[h]])
        if (parent[b] < 0) {
          parent[b] = queue[h];
          queue.push_back(b);
        }
    int y = z;
    for (int c = parent[z]; c != x; c = parent[c])
      if (!in[c]) y = c;
    out.push_back({Violation::Kind::connectivity,
                   "bags " + std::to_string(x) + " and " + std::to_string(z) + " hold vertex " + std::to_string(v) +
                       " but bag " + std::to_string(y) + " between them does not",
                   {v, x, y, z}});
  }
  return out;
}

bool is_valid(const Graph& host, const TreeDecomposition& td) { return validate(host, td).empty(); }

int width(const TreeDecomposition& td) {
  int w = -1;
  for (const auto& b : td.bags()) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int length(const Graph& host, const TreeDecomposition& td) {
  require_connected(host, "tree decomposition length");
  if (!is_valid(host, td)) throw PreconditionError("invalid tree decomposition");
  auto dm = all_pairs_distances(host);
  int len = 0;
  for (const auto& b : td.bags())
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) len = std::max(len, dm(b[i], b[j]));
  return len;
}

bool is_reduced(const TreeDecomposition& td) {
  for (std::size_t i = 0; i < td.nbags(); ++i)
    for (std::size_t j = 0; j < td.nbags(); ++j)
      if (i != j && subset(td.bag(i), td.bag(j))) return false;
  return true;
}

TreeDecomposition reduce(const Graph& host, const TreeDecomposition& td) {
  if (!is_valid(host, td)) throw PreconditionError("invalid tree decomposition");
  const int m = static_cast<int>(td.nbags());
  std::vector<std::set<int>> adj(static_cast<std::size_t>(m));
  for (auto [a, b] : td.tree_edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> alive(static_cast<std::size_t>(m), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < m && !changed; ++a) {
      if (!alive[a]) continue;
      for (int b : adj[a]) {
        if (!subset(td.bag(a), td.bag(b))) continue;
        for (int c : adj[a])
          if (c != b) {
            adj[c].erase(a);
            adj[c].insert(b);
            adj[b].insert(c);
          }
        adj[b].erase(a);
        adj[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> index(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<int>> bags;
  for (int a = 0; a < m; ++a)
    if (alive[a]) {
      index[a] = static_cast<int>(bags.size());
      bags.push_back(td.bag(a));
    }
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b : adj[a])
      if (alive[a] && a < b) edges.emplace_back(index[a], index[b]);
  return TreeDecomposition(std::move(bags), std::move(edges));
}

namespace {

// Maximum weight spanning tree over bags, weight = intersection size.
// Ties prefer lower bag indices, so output is deterministic.
std::vector<Edge> max_intersection_tree(const std::vector<std::vector<int>>& bags) {
  const int m = static_cast<int>(bags.size());
  std::vector<std::tuple<int, int, int>> cand;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<int> common;
      std::set_intersection(bags[a].begin(), bags[a].end(), bags[b].begin(), bags[b].end(), std::back_inserter(common));
      cand.emplace_back(-static_cast<int>(common.size()), a, b);
    }
  std::sort(cand.begin(), cand.end());
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> edges;
  for (auto [w, a, b] : cand) {
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    parent[ra] = rb;
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

TreeDecomposition clique_tree(const Graph& g) {
  if (!is_chordal(g)) throw PreconditionError("clique tree requires a chordal graph");
  const int n = g.order();
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::vector<int>> cliques;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> c{v};
    for (int w : g.neighbors(v))
      if (pos[w] > i) c.push_back(w);
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  std::vector<std::vector<int>> maximal;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cliques.size() && !dominated; ++j) {
      if (i == j || !subset(cliques[i], cliques[j])) continue;
      if (cliques[i] != cliques[j] || j < i) dominated = true;
    }
    if (!dominated) maximal.push_back(cliques[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  auto edges = max_intersection_tree(maximal);
  return TreeDecomposition(std::move(maximal), std::move(edges));
}

TreeDecomposition decomposition_from_order(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw PreconditionError("elimination order must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw PreconditionError("elimination order must list every vertex once");
    pos[v] = i;
  }
  std::vector<Bitset> adj;
  for (int v = 0; v < n; ++v) adj.push_back(g.row(v));
  std::vector<std::vector<int>> bags(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later = adj[v].to_vector();
    bags[i].push_back(v);
    int earliest = -1;
    for (int w : later) {
      bags[i].push_back(w);
      if (earliest < 0 || pos[w] < pos[earliest]) earliest = w;
    }
    if (earliest >= 0) parent[i] = pos[earliest];
    for (int a : later) {
      adj[a].reset(static_cast<std::size_t>(v));
      for (int b : later)
        if (a != b) adj[a].set(static_cast<std::size_t>(b));
    }
  }
  std::vector<Edge> edges;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      edges.emplace_back(i, parent[i]);
    } else {
      if (previous_root >= 0) edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return TreeDecomposition(std::move(bags), std::move(edges));
}

namespace {

class TreewidthSearch {
 public:
  explicit TreewidthSearch(const Graph& g) : n_(g.order()), adj0_(static_cast<std::size_t>(g.order()), 0) {
    for (int v = 0; v < n_; ++v)
      for (int w : g.neighbors(v)) adj0_[v] |= 1U << w;
  }

  TreewidthResult run() {
    TreewidthResult r;
    auto [ub, order] = min_fill(adj0_);
    best_ = ub;
    best_order_ = order;
    std::vector<int> prefix;
    dfs(adj0_, 0, -1, prefix);
    r.width = best_;
    r.order = best_order_;
    return r;
  }

 private:
  using Adj = std::vector<std::uint32_t>;

  std::uint32_t full() const { return n_ == 32 ? ~0U : ((1U << n_) - 1); }

  static void eliminate(Adj& adj, int v) {
    std::uint32_t nb = adj[v];
    for (std::uint32_t f = nb; f; f &= f - 1) {
      int w = std::countr_zero(f);
      adj[w] |= nb & ~(1U << w);
      adj[w] &= ~(1U << v);
    }
    adj[v] = 0;
  }

  std::pair<int, std::vector<int>> min_fill(Adj adj) const {
    std::uint32_t left = full();
    int w = -1;
    std::vector<int> order;
    while (left) {
      int pick = -1;
      long best_fill = -1;
      for (std::uint32_t f = left; f; f &= f - 1) {
        int v = std::countr_zero(f);
        long fill = 0;
        for (std::uint32_t g = adj[v]; g; g &= g - 1) {
          int a = std::countr_zero(g);
          fill += std::popcount(adj[v] & ~adj[a] & ~(1U << a));
        }
        if (pick < 0 || fill < best_fill) {
          pick = v;
          best_fill = fill;
        }
      }
      w = std::max(w, std::popcount(adj[pick]));
      order.push_back(pick);
      eliminate(adj, pick);
      left &= ~(1U << pick);
    }
    return {w, order};
  }

  // Degeneracy of the remaining graph: a lower bound on its treewidth.
  static int degeneracy(Adj adj, std::uint32_t left) {
    int best = 0;
    while (left) {
      int pick = -1;
      int deg = 0;
      for (std::uint32_t f = left; f; f &= f - 1) {
        int v = std::countr_zero(f);
        int d = std::popcount(adj[v] & left);
        if (pick < 0 || d < deg) {
          pick = v;
          deg = d;
        }
      }
      best = std::max(best, deg);
      left &= ~(1U << pick);
    }
    return best;
  }

  void dfs(Adj adj, std::uint32_t eliminated, int cur, std::vector<int>& prefix) {
    const std::size_t mark = prefix.size();
    std::uint32_t left = full() & ~eliminated;
    // Simplicial vertices of degree at most the current width are
    // eliminated without branching.
    bool again = true;
    while (again && left) {
      again = false;
      for (std::uint32_t f = left; f; f &= f - 1) {
        int v = std::countr_zero(f);
        std::uint32_t nb = adj[v];
        int deg = std::popcount(nb);
        if (deg > std::max(cur, 0)) continue;
        bool clique = true;
        for (std::uint32_t g = nb; g && clique; g &= g - 1) {
          int a = std::countr_zero(g);
          if ((adj[a] | (1U << a)) != ((adj[a] | (1U << a)) | nb)) clique = false;
        }
        if (!clique) continue;
        cur = std::max(cur, deg);
        eliminate(adj, v);
        eliminated |= 1U << v;
        left &= ~(1U << v);
        prefix.push_back(v);
        again = true;
        break;
      }
    }

    int remaining = std::popcount(left);
    if (cur >= best_) {
      prefix.resize(mark);
      return;
    }
    if (remaining == 0 || remaining - 1 <= cur) {
      int w = std::max(cur, remaining - 1);
      if (w < best_) {
        best_ = w;
        best_order_ = prefix;
        for (std::uint32_t f = left; f; f &= f - 1) best_order_.push_back(std::countr_zero(f));
      }
      prefix.resize(mark);
      return;
    }
    auto it = memo_.find(eliminated);
    if (it != memo_.end() && it->second <= cur) {
      prefix.resize(mark);
      return;
    }
    memo_[eliminated] = cur;
    if (std::max(cur, degeneracy(adj, left)) >= best_) {
      prefix.resize(mark);
      return;
    }

    std::vector<std::pair<int, int>> cands;
    for (std::uint32_t f = left; f; f &= f - 1) {
      int v = std::countr_zero(f);
      cands.emplace_back(std::popcount(adj[v]), v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [deg, v] : cands) {
      if (std::max(cur, deg) >= best_) continue;
      Adj next = adj;
      eliminate(next, v);
      prefix.push_back(v);
      dfs(next, eliminated | (1U << v), std::max(cur, deg), prefix);
      prefix.pop_back();
    }
    prefix.resize(mark);
  }

  int n_;
  Adj adj0_;
  int best_ = 0;
  std::vector<int> best_order_;
  std::unordered_map<std::uint32_t, int> memo_;
};

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices || n > 32) throw InstanceTooLarge("treewidth vertex count", n, std::min(max_vertices, 32));
  TreewidthResult r;
  if (n == 0) return r;
  r = TreewidthSearch(g).run();
  r.decomposition = decomposition_from_order(g, r.order);
  if (width(r.decomposition) != r.width || !is_valid(g, r.decomposition))
    throw Error("internal error: treewidth decomposition does not match its order");
  return r;
}

std::optional<int> noncut_internal_bag(const Graph& host, const TreeDecomposition& td) {
  require_connected(host, "cutset check");
  if (!is_valid(host, td)) throw PreconditionError("invalid tree decomposition");
  if (!is_reduced(td)) throw PreconditionError("cutset check requires a reduced decomposition");
  auto adj = td.tree_adjacency();
  for (std::size_t i = 0; i < td.nbags(); ++i) {
    if (adj[i].size() < 2) continue;
    Bitset removed(static_cast<std::size_t>(host.order()));
    for (int v : td.bag(i)) removed.set(static_cast<std::size_t>(v));
    if (count_components(host, removed) < 2) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool nonleaf_bags_are_cutsets(const Graph& host, const TreeDecomposition& td) {
  return !noncut_internal_bag(host, td).has_value();
}

PaceDecomposition parse_pace(std::string_view text) {
  PaceDecomposition out;
  int nbags = -1;
  int declared_width = 0;
  std::vector<std::vector<int>> bags;
  std::vector<char> seen_bag;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t offset = pos;
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    std::size_t p = line.find_first_not_of(" \t");
    if (p == std::string_view::npos || line[p] == 'c') continue;

    auto read_ints = [&](std::size_t from) {
      std::vector<long long> nums;
      std::size_t q = from;
      while (q < line.size()) {
        while (q < line.size() && (line[q] == ' ' || line[q] == '\t')) ++q;
        if (q >= line.size()) break;
        long long v = 0;
        auto res = std::from_chars(line.data() + q, line.data() + line.size(), v);
        if (res.ec != std::errc()) throw ParseError("expected an integer", offset + q);
        nums.push_back(v);
        q = static_cast<std::size_t>(res.ptr - line.data());
      }
      return nums;
    };

    if (line[p] == 's') {
      if (nbags >= 0) throw ParseError("duplicate solution line", offset + p);
      if (line.substr(p, 4) != "s td") throw ParseError("expected 's td'", offset + p);
      auto nums = read_ints(p + 4);
      if (nums.size() != 3 || nums[0] < 0 || nums[1] < 0 || nums[2] < 0)
        throw ParseError("solution line needs NBAGS WIDTH+1 NVERTS", offset + p);
      nbags = static_cast<int>(nums[0]);
      declared_width = static_cast<int>(nums[1]);
      out.nverts = static_cast<int>(nums[2]);
      bags.assign(static_cast<std::size_t>(nbags), {});
      seen_bag.assign(static_cast<std::size_t>(nbags), 0);
      continue;
    }
    if (nbags < 0) throw ParseError("content before the 's td' line", offset + p);
    if (line[p] == 'b') {
      auto nums = read_ints(p + 1);
      if (nums.empty() || nums[0] < 1 || nums[0] > nbags) throw ParseError("bag index out of range", offset + p);
      int id = static_cast<int>(nums[0]) - 1;
      if (seen_bag[id]) throw ParseError("bag listed twice", offset + p);
      seen_bag[id] = 1;
      for (std::size_t i = 1; i < nums.size(); ++i) {
        if (nums[i] < 1 || nums[i] > out.nverts) throw ParseError("bag vertex out of range", offset + p);
        bags[id].push_back(static_cast<int>(nums[i]) - 1);
      }
      if (static_cast<int>(bags[id].size()) > declared_width) throw ParseError("bag larger than declared width+1", offset + p);
      continue;
    }
    auto nums = read_ints(p);
    if (nums.size() != 2 || nums[0] < 1 || nums[1] < 1 || nums[0] > nbags || nums[1] > nbags)
      throw ParseError("tree edge must name two bags", offset + p);
    edges.emplace_back(static_cast<int>(nums[0]) - 1, static_cast<int>(nums[1]) - 1);
  }
  if (nbags < 0) throw ParseError("missing 's td' line", text.size());
  for (int i = 0; i < nbags; ++i)
    if (!seen_bag[i]) throw ParseError("bag " + std::to_string(i + 1) + " never listed", text.size());
  out.td = TreeDecomposition(std::move(bags), std::move(edges));
  return out;
}

std::string encode_pace(const TreeDecomposition& td, int nverts) {
  std::ostringstream os;
  os << "s td " << td.nbags() << ' ' << (width(td) + 1) << ' ' << nverts << '\n';
  for (std::size_t i = 0; i < td.nbags(); ++i) {
    os << "b " << (i + 1);
    for (int v : td.bag(i)) os << ' ' << (v + 1);
    os << '\n';
  }
  for (auto [a, b] : td.tree_edges()) os << (a + 1) << ' ' << (b + 1) << '\n';
  return os.str();
}

}  // namespace metriclab

#include "metriclab/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "metriclab/error.hpp"
#include "metriclab/graph_io.hpp"

namespace metriclab {
namespace {

// Refines `colour` (indexed over all vertices of the graphs in `graphs`,
// concatenated) until stable. Signatures are compared as sorted vectors so
// the numbering depends only on isomorphism-invariant data.
std::vector<int> refine(const std::vector<const Graph*>& graphs, std::vector<int> colour) {
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig;
    sig.reserve(colour.size());
    int base = 0;
    for (const Graph* g : graphs) {
      for (int v = 0; v < g->order(); ++v) {
        std::vector<int> s;
        s.reserve(static_cast<std::size_t>(g->degree(v)) + 1);
        s.push_back(colour[base + v]);
        std::vector<int> nb;
        for (int w : g->neighbors(v)) nb.push_back(colour[base + w]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        ids.emplace(s, 0);
        sig.push_back(std::move(s));
      }
      base += g->order();
    }
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> refined(colour.size());
    for (std::size_t i = 0; i < sig.size(); ++i) refined[i] = ids[sig[i]];
    if (ids.size() == classes) return refined;
    classes = ids.size();
    colour = std::move(refined);
  }
}

std::vector<int> initial_colours(const std::vector<const Graph*>& graphs) {
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> sig;
  for (const Graph* g : graphs) {
    auto dm = all_pairs_distances(*g);
    for (int v = 0; v < g->order(); ++v) {
      std::vector<int> s(dm.row(v).begin(), dm.row(v).end());
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), g->degree(v));
      ids.emplace(s, 0);
      sig.push_back(std::move(s));
    }
  }
  int next = 0;
  for (auto& [s, id] : ids) id = next++;
  std::vector<int> out;
  out.reserve(sig.size());
  for (auto& s : sig) out.push_back(ids[s]);
  return out;
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> cg, ch;  // colours
  std::vector<int> order;   // g vertices in matching order
  std::vector<int> map_gh, map_hg;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
      if (map_hg[w] >= 0 || ch[w] != cg[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        int u = order[i];
        if (g.has_edge(u, v) != h.has_edge(map_gh[u], w)) ok = false;
      }
      if (!ok) continue;
      map_gh[v] = w;
      map_hg[w] = v;
      if (extend(depth + 1)) return true;
      map_gh[v] = -1;
      map_hg[w] = -1;
    }
    return false;
  }
};

}  // namespace

std::vector<int> refine_colours(const Graph& g) {
  std::vector<const Graph*> gs{&g};
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  return refine(gs, deg);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, int max_vertices) {
  if (g.order() > max_vertices) throw InstanceTooLarge("isomorphism test", g.order(), max_vertices);
  if (h.order() > max_vertices) throw InstanceTooLarge("isomorphism test", h.order(), max_vertices);
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();

  std::vector<const Graph*> both{&g, &h};
  auto colour = refine(both, initial_colours(both));
  Matcher m{g, h, {colour.begin(), colour.begin() + n}, {colour.begin() + n, colour.end()}, {}, {}, {}};

  std::vector<int> hist_g(colour.size(), 0), hist_h(colour.size(), 0);
  for (int v = 0; v < n; ++v) {
    ++hist_g[m.cg[v]];
    ++hist_h[m.ch[v]];
  }
  if (hist_g != hist_h) return std::nullopt;

  // Match rare colours first, then stay adjacent to what is already placed.
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    auto key = [&](int v) {
      int attached = 0;
      for (int w : g.neighbors(v)) attached += placed[w];
      return std::make_tuple(attached > 0 ? 0 : 1, hist_g[m.cg[v]], -attached, v);
    };
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (best < 0 || key(v) < key(best))) best = v;
    placed[best] = 1;
    m.order.push_back(best);
  }
  m.map_gh.assign(static_cast<std::size_t>(n), -1);
  m.map_hg.assign(static_cast<std::size_t>(n), -1);
  if (!m.extend(0)) return std::nullopt;
  return m.map_gh;
}

bool isomorphic(const Graph& g, const Graph& h, int max_vertices) {
  return find_isomorphism(g, h, max_vertices).has_value();
}

std::string canonical_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InstanceTooLarge("canonical form", n, 11);
  auto colour = refine_colours(g);

  // Positions are filled cell by cell in colour order; within a cell every
  // vertex is tried. The adjacency key is built column by column (the
  // graph6 bit order), so a partial key already larger than the best one
  // prunes the branch.
  std::vector<int> slot_colour;
  for (int c = 0; c < n; ++c)
    for (int v = 0; v < n; ++v)
      if (colour[v] == c) slot_colour.push_back(c);

  std::vector<int> perm(static_cast<std::size_t>(n), -1);  // slot -> vertex
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> best_perm;
  std::uint64_t best_key = ~std::uint64_t{0};
  const int total_bits = n * (n - 1) / 2;

  auto rec = [&](auto&& self, int slot, std::uint64_t key, int bits) -> void {
    if (slot == n) {
      if (best_perm.empty() || key < best_key) {
        best_key = key;
        best_perm = perm;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || colour[v] != slot_colour[slot]) continue;
      std::uint64_t k = key;
      for (int i = 0; i < slot; ++i) k = (k << 1) | (g.has_edge(perm[i], v) ? 1U : 0U);
      int nb = bits + slot;
      if (!best_perm.empty()) {
        std::uint64_t best_prefix = total_bits == nb ? best_key : (best_key >> (total_bits - nb));
        if (k > best_prefix) continue;
      }
      used[v] = 1;
      perm[slot] = v;
      self(self, slot + 1, k, nb);
      used[v] = 0;
    }
  };
  rec(rec, 0, 0, 0);

  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) inverse[best_perm[s]] = s;
  Graph canon(n);
  for (auto [u, v] : g.edges()) canon.add_edge(inverse[u], inverse[v]);
  return encode_graph6(canon);
}

}  // namespace metriclab

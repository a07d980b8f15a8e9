#include "metriclab/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "metriclab/error.hpp"
#include "metriclab/set_cover.hpp"

namespace metriclab {

Hypergraph::Hypergraph(int nverts) : nverts_(nverts) {
  if (nverts < 0) throw PreconditionError("hypergraph vertex count must be nonnegative");
}

Hypergraph::Hypergraph(int nverts, const std::vector<std::vector<int>>& edges) : Hypergraph(nverts) {
  for (const auto& e : edges) add_edge(e);
}

void Hypergraph::add_edge(Bitset e) {
  if (e.size() != static_cast<std::size_t>(nverts_)) throw PreconditionError("edge bitset has the wrong width");
  if (labelled()) throw PreconditionError("cannot add an unlabelled edge to a ball hypergraph");
  edges_.push_back(std::move(e));
}

void Hypergraph::add_edge(const std::vector<int>& vertices) {
  Bitset e(static_cast<std::size_t>(nverts_));
  for (int v : vertices) {
    if (v < 0 || v >= nverts_) throw PreconditionError("edge vertex out of range: " + std::to_string(v));
    e.set(static_cast<std::size_t>(v));
  }
  add_edge(std::move(e));
}

void Hypergraph::add_ball(Bitset e, Ball label) {
  if (!edges_.empty() && !labelled()) throw PreconditionError("cannot add a ball to an unlabelled hypergraph");
  if (e.size() != static_cast<std::size_t>(nverts_)) throw PreconditionError("edge bitset has the wrong width");
  edges_.push_back(std::move(e));
  labels_.push_back(label);
}

Bitset Hypergraph::incidence(int v) const {
  Bitset col(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].test(static_cast<std::size_t>(v))) col.set(i);
  return col;
}

Hypergraph dedup(const Hypergraph& h) {
  Hypergraph out(h.nverts());
  std::unordered_set<Bitset, BitsetHash> seen;
  for (std::size_t i = 0; i < h.nedges(); ++i) {
    if (!seen.insert(h.edge(i)).second) continue;
    if (h.labelled())
      out.add_ball(h.edge(i), h.labels()[i]);
    else
      out.add_edge(h.edge(i));
  }
  return out;
}

Bitset ball(const DistanceMatrix& dm, int center, int radius) {
  Bitset b(static_cast<std::size_t>(dm.order()));
  auto row = dm.row(center);
  for (int v = 0; v < dm.order(); ++v)
    if (row[v] != DistanceMatrix::kUnreachable && row[v] <= radius) b.set(static_cast<std::size_t>(v));
  return b;
}

Hypergraph distance_hypergraph(const Graph& g, bool keep_duplicates) {
  require_connected(g, "distance hypergraph");
  auto dm = all_pairs_distances(g);
  const int d = diameter(dm);
  Hypergraph h(g.order());
  std::unordered_set<Bitset, BitsetHash> seen;
  for (int v = 0; v < g.order(); ++v)
    for (int r = 0; r <= d; ++r) {
      Bitset b = ball(dm, v, r);
      if (keep_duplicates || seen.insert(b).second) h.add_ball(std::move(b), {v, r});
    }
  return h;
}

Hypergraph distance_hypergraph_fixed_radius(const Graph& g, int radius) {
  require_connected(g, "distance hypergraph");
  auto dm = all_pairs_distances(g);
  if (radius < 0 || radius > diameter(dm))
    throw PreconditionError("radius " + std::to_string(radius) + " outside [0, diameter]");
  Hypergraph h(g.order());
  for (int v = 0; v < g.order(); ++v) h.add_ball(ball(dm, v, radius), {v, radius});
  return h;
}

Hypergraph closed_neighbourhood_hypergraph(const Graph& g) {
  Hypergraph h(g.order());
  for (int v = 0; v < g.order(); ++v) h.add_ball(g.closed_row(v), {v, 1});
  return h;
}

Hypergraph trace(const Hypergraph& h, std::span<const int> x) {
  Hypergraph out(static_cast<int>(x.size()));
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& e : h.edges()) {
    Bitset t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e.test(static_cast<std::size_t>(x[i]))) t.set(i);
    if (seen.insert(t).second) out.add_edge(std::move(t));
  }
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  Hypergraph out(static_cast<int>(h.nedges()));
  for (int v = 0; v < h.nverts(); ++v) out.add_edge(h.incidence(v));
  return out;
}

bool is_twin_free(const Hypergraph& h) {
  std::unordered_set<Bitset, BitsetHash> cols;
  for (int v = 0; v < h.nverts(); ++v)
    if (!cols.insert(h.incidence(v)).second) return false;
  return true;
}

bool covers_all_vertices(const Hypergraph& h) {
  Bitset all(static_cast<std::size_t>(h.nverts()));
  for (const auto& e : h.edges()) all |= e;
  return all.count() == static_cast<std::size_t>(h.nverts());
}

bool is_test_cover(const Hypergraph& h, std::span<const int> edge_indices) {
  std::unordered_set<Bitset, BitsetHash> sigs;
  for (int v = 0; v < h.nverts(); ++v) {
    Bitset sig(edge_indices.size());
    for (std::size_t i = 0; i < edge_indices.size(); ++i) {
      int e = edge_indices[i];
      if (e < 0 || static_cast<std::size_t>(e) >= h.nedges()) return false;
      if (h.edge(static_cast<std::size_t>(e)).test(static_cast<std::size_t>(v))) sig.set(i);
    }
    if (sig.none() || !sigs.insert(sig).second) return false;
  }
  return true;
}

std::vector<int> min_test_cover(const Hypergraph& h, int max_edges) {
  if (static_cast<long long>(h.nedges()) > max_edges)
    throw InstanceTooLarge("test cover edge count", static_cast<long long>(h.nedges()), max_edges);
  if (!is_twin_free(h)) throw PreconditionError("hypergraph has twin vertices; no test cover exists");
  if (!covers_all_vertices(h)) throw PreconditionError("some vertex lies in no edge; no test cover exists");
  const std::size_t n = static_cast<std::size_t>(h.nverts());
  // Elements: vertex v (to be covered) is v; pair {u,v} (to be separated)
  // follows after the n vertex elements.
  const std::size_t universe = n + n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<Bitset> cands;
  for (const auto& e : h.edges()) {
    Bitset c(universe);
    std::size_t idx = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (e.test(u)) c.set(u);
      for (std::size_t v = u + 1; v < n; ++v, ++idx)
        if (e.test(u) != e.test(v)) c.set(idx);
    }
    cands.push_back(std::move(c));
  }
  auto cover = min_set_cover(cands, universe);
  if (!cover || !is_test_cover(h, *cover)) throw Error("internal error: test cover search failed");
  return *cover;
}

bool is_shattered(const Hypergraph& h, std::span<const int> x) {
  if (x.size() >= 63) return false;
  std::set<std::uint64_t> patterns;
  for (const auto& e : h.edges()) {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e.test(static_cast<std::size_t>(x[i]))) p |= std::uint64_t{1} << i;
    patterns.insert(p);
  }
  return patterns.size() == (std::size_t{1} << x.size());
}

bool is_2_shattered(const Hypergraph& h, std::span<const int> x) {
  const std::size_t s = x.size();
  std::vector<char> realised(s * s, 0);
  for (const auto& e : h.edges()) {
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < s && in.size() <= 2; ++i)
      if (e.test(static_cast<std::size_t>(x[i]))) in.push_back(i);
    if (in.size() == 2) realised[in[0] * s + in[1]] = 1;
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (!realised[i * s + j]) return false;
  return true;
}

namespace {

std::vector<Bitset> incidence_columns(const Hypergraph& h) {
  std::vector<Bitset> cols;
  for (int v = 0; v < h.nverts(); ++v) cols.push_back(h.incidence(v));
  return cols;
}

// Shattered sets are closed under subsets, so every one of them is reached
// by extending its prefixes in increasing vertex order. Edges are grouped
// by their trace on the current set; a vertex extends the set iff it splits
// every group.
class FullSearch {
 public:
  explicit FullSearch(const Hypergraph& h) : h_(h), cols_(incidence_columns(h)) {}

  std::vector<int> run() {
    std::vector<int> x;
    std::vector<Bitset> groups{Bitset::full(h_.nedges())};
    best_.clear();
    dfs(x, groups, 0);
    return best_;
  }

 private:
  void dfs(std::vector<int>& x, const std::vector<Bitset>& groups, int start) {
    if (x.size() > best_.size()) best_ = x;
    if ((std::size_t{2} << x.size()) > h_.nedges()) return;
    for (int v = start; v < h_.nverts(); ++v) {
      if (x.size() + static_cast<std::size_t>(h_.nverts() - v) <= best_.size()) break;
      std::vector<Bitset> next;
      next.reserve(groups.size() * 2);
      bool ok = true;
      for (const auto& grp : groups) {
        Bitset in = grp & cols_[v];
        Bitset out = grp - cols_[v];
        if (in.none() || out.none()) {
          ok = false;
          break;
        }
        next.push_back(std::move(in));
        next.push_back(std::move(out));
      }
      if (!ok) continue;
      x.push_back(v);
      dfs(x, next, v + 1);
      x.pop_back();
    }
  }

  const Hypergraph& h_;
  std::vector<Bitset> cols_;
  std::vector<int> best_;
};

// 2-shattered sets are closed under subsets as well. The search keeps, for
// the current set X, the edges missing X, the edges meeting X in exactly
// {a}, and the edges meeting X in exactly each pair.
class PairSearch {
 public:
  explicit PairSearch(const Hypergraph& h) : h_(h), cols_(incidence_columns(h)) {}

  std::vector<int> run() {
    best_.clear();
    if (h_.nverts() == 0) return best_;
    best_ = {0};
    std::vector<int> x;
    std::vector<Bitset> single;
    std::vector<Bitset> pairs;
    dfs(x, Bitset::full(h_.nedges()), single, pairs, 0);
    return best_;
  }

 private:
  void dfs(std::vector<int>& x, const Bitset& empty, const std::vector<Bitset>& single,
           const std::vector<Bitset>& pairs, int start) {
    if (x.size() > best_.size()) best_ = x;
    const std::size_t s = x.size() + 1;
    if (s * (s - 1) / 2 > h_.nedges()) return;
    for (int v = start; v < h_.nverts(); ++v) {
      if (x.size() + static_cast<std::size_t>(h_.nverts() - v) <= best_.size()) break;
      const Bitset& col = cols_[v];
      bool ok = true;
      std::vector<Bitset> next_pairs;
      next_pairs.reserve(pairs.size() + x.size());
      for (const auto& p : pairs) {
        Bitset q = p - col;
        if (q.none()) {
          ok = false;
          break;
        }
        next_pairs.push_back(std::move(q));
      }
      if (!ok) continue;
      for (const auto& sa : single) {
        Bitset q = sa & col;
        if (q.none()) {
          ok = false;
          break;
        }
        next_pairs.push_back(std::move(q));
      }
      if (!ok) continue;
      std::vector<Bitset> next_single;
      next_single.reserve(single.size() + 1);
      for (const auto& sa : single) next_single.push_back(sa - col);
      next_single.push_back(empty & col);
      x.push_back(v);
      dfs(x, empty - col, next_single, next_pairs, v + 1);
      x.pop_back();
    }
  }

  const Hypergraph& h_;
  std::vector<Bitset> cols_;
  std::vector<int> best_;
};

std::uint64_t pattern_on(const Bitset& e, std::span<const int> x) {
  std::uint64_t p = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (e.test(static_cast<std::size_t>(x[i]))) p |= std::uint64_t{1} << i;
  return p;
}

std::vector<int> subset_of(std::uint64_t p, std::span<const int> x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if ((p >> i) & 1U) out.push_back(x[i]);
  return out;
}

}  // namespace

VcResult vc_dimension(const Hypergraph& h, int max_vertices) {
  if (h.nverts() > max_vertices) throw InstanceTooLarge("VC dimension vertex count", h.nverts(), max_vertices);
  VcResult r;
  r.witness.mode = ShatterWitness::Mode::full;
  if (h.nedges() == 0) {
    r.dimension = -1;
    return r;
  }
  r.witness.set = FullSearch(h).run();
  r.dimension = static_cast<int>(r.witness.set.size());
  std::map<std::uint64_t, int> first;
  for (std::size_t i = 0; i < h.nedges(); ++i) first.emplace(pattern_on(h.edge(i), r.witness.set), static_cast<int>(i));
  for (auto [p, e] : first) r.witness.traces.emplace_back(subset_of(p, r.witness.set), e);
  if (first.size() != (std::size_t{1} << r.witness.set.size()))
    throw Error("internal error: VC witness is not shattered");
  return r;
}

VcResult vc2_dimension(const Hypergraph& h, int max_vertices) {
  if (h.nverts() > max_vertices) throw InstanceTooLarge("2-VC dimension vertex count", h.nverts(), max_vertices);
  VcResult r;
  r.witness.mode = ShatterWitness::Mode::pairs;
  r.witness.set = PairSearch(h).run();
  r.dimension = static_cast<int>(r.witness.set.size());
  const auto& x = r.witness.set;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      std::uint64_t want = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      int found = -1;
      for (std::size_t e = 0; e < h.nedges() && found < 0; ++e)
        if (pattern_on(h.edge(e), x) == want) found = static_cast<int>(e);
      if (found < 0) throw Error("internal error: 2-VC witness is not 2-shattered");
      r.witness.traces.emplace_back(std::vector<int>{x[i], x[j]}, found);
    }
  return r;
}

int dual_distance_vc(const Graph& g, int max_vertices) {
  return vc_dimension(dual(distance_hypergraph(g)), max_vertices).dimension;
}

int dual_distance_2vc(const Graph& g, int max_vertices) {
  return vc2_dimension(dual(distance_hypergraph(g)), max_vertices).dimension;
}

Prop9Witness prop9_witness(const Hypergraph& h, int max_vertices) {
  Hypergraph hd = dual(h);
  auto vc = vc_dimension(hd, max_vertices);
  if (vc.dimension < 1) throw PreconditionError("dual VC dimension is below 1; no shattered dual family");
  Prop9Witness w;
  w.dual_vc = vc.dimension;
  w.family = vc.witness.set;
  for (const auto& [subset, vertex] : vc.witness.traces)
    if (!subset.empty()) w.vertices.push_back(vertex);
  std::sort(w.vertices.begin(), w.vertices.end());

  w.projected = Hypergraph(static_cast<int>(w.vertices.size()));
  for (const auto& e : h.edges()) {
    Bitset t(w.vertices.size());
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
      if (e.test(static_cast<std::size_t>(w.vertices[i]))) t.set(i);
    w.projected.add_edge(std::move(t));
  }
  const std::size_t expected = (std::size_t{1} << w.dual_vc) - 1;
  if (w.vertices.size() != expected) throw Error("internal error: witness has the wrong number of vertices");
  if (!is_test_cover(w.projected, w.family)) throw Error("internal error: dual family is not a test cover");
  w.test_cover_size = static_cast<int>(min_test_cover(w.projected, static_cast<int>(w.projected.nedges())).size());
  if (w.test_cover_size != w.dual_vc) throw Error("internal error: witness test cover size differs from k");
  return w;
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line, std::size_t& offset) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    offset = pos;
    line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    return true;
  };
  auto numbers = [](std::string_view s, std::size_t offset) {
    std::vector<long long> out;
    std::size_t p = 0;
    while (p < s.size()) {
      while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
      if (p >= s.size()) break;
      long long v = 0;
      auto res = std::from_chars(s.data() + p, s.data() + s.size(), v);
      if (res.ec != std::errc() || v < 0) throw ParseError("expected a nonnegative integer", offset + p);
      out.push_back(v);
      p = static_cast<std::size_t>(res.ptr - s.data());
    }
    return out;
  };

  std::string_view line;
  std::size_t offset = 0;
  while (true) {
    if (!next_line(line, offset)) throw ParseError("missing 'p hyper' header", text.size());
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == 'c' || line[first] == '#') continue;
    break;
  }
  constexpr std::string_view kTag = "p hyper";
  auto start = line.find_first_not_of(" \t");
  if (line.substr(start, kTag.size()) != kTag) throw ParseError("expected 'p hyper NVERTS NEDGES'", offset + start);
  auto header = numbers(line.substr(start + kTag.size()), offset + start + kTag.size());
  if (header.size() != 2) throw ParseError("header needs NVERTS and NEDGES", offset);
  Hypergraph h(static_cast<int>(header[0]));
  for (long long i = 0; i < header[1]; ++i) {
    if (!next_line(line, offset)) throw ParseError("fewer edge lines than declared", text.size());
    auto vs = numbers(line, offset);
    Bitset e(static_cast<std::size_t>(h.nverts()));
    for (auto v : vs) {
      if (v >= h.nverts()) throw ParseError("edge vertex out of range", offset);
      e.set(static_cast<std::size_t>(v));
    }
    h.add_edge(std::move(e));
  }
  while (next_line(line, offset))
    if (line.find_first_not_of(" \t") != std::string_view::npos) throw ParseError("trailing content after edges", offset);
  return h;
}

std::string encode_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  os << "p hyper " << h.nverts() << ' ' << h.nedges() << '\n';
  for (const auto& e : h.edges()) {
    bool first = true;
    e.for_each([&](int v) {
      if (!first) os << ' ';
      os << v;
      first = false;
    });
    os << '\n';
  }
  return os.str();
}

}  // namespace metriclab

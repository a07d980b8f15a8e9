#include "metriclab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "metriclab/bounds.hpp"
#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/extremal.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/hypergraph.hpp"
#include "metriclab/isomorphism.hpp"
#include "metriclab/minors.hpp"
#include "metriclab/resolving.hpp"
#include "metriclab/treedecomp.hpp"

namespace metriclab {
namespace {

std::string g6(const Graph& g) { return encode_graph6(g); }

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double as_double(const BigInt& b) { return b.convert_to<double>(); }

class Recorder {
 public:
  Recorder(std::string suite, SuiteReport& r) : r_(r) { r_.suite = std::move(suite); }

  void fail(const std::string& instance, const std::string& claim, const std::string& measured,
            const std::string& bound, const std::string& witness) {
    r_.failures.push_back({instance, claim, measured, bound, witness});
  }
  void fail(const Graph& g, const std::string& claim, const std::string& measured, const std::string& bound) {
    fail(g6(g), claim, measured, bound, g6(g));
  }
  // n <= bound; records the ratio and a failure when violated.
  void at_most(const Graph& g, const std::string& instance, const std::string& claim, long long n, const BigInt& bound) {
    if (bound > 0) r_.max_ratio = std::max(r_.max_ratio, static_cast<double>(n) / as_double(bound));
    if (BigInt(n) > bound) fail(instance, claim, str(n), bound.str(), g6(g));
  }
  void observe(const std::string& instance, const std::string& q, const std::string& m, const std::string& ref) {
    r_.observations.push_back({instance, q, m, ref});
  }

 private:
  SuiteReport& r_;
};

int md_cap_for(const SuiteConfig& c, const Graph& g) { return std::max(c.limits.metric_dimension_vertices, g.order()); }

std::vector<Graph> graph_pool(const SuiteConfig& c, int nmax, SuiteReport& r) {
  if (!c.graphs.empty()) {
    std::vector<Graph> out;
    for (const auto& g : c.graphs)
      if (is_connected(g) && g.order() >= 1) out.push_back(g);
    return out;
  }
  const int builtin = std::min(nmax, c.limits.connected_enumeration);
  auto pool = connected_graphs_up_to(builtin, c.limits.connected_enumeration);
  if (!c.corpus.empty()) {
    long long added = 0;
    for (auto& g : read_graph6_file(c.corpus))
      if (g.order() > builtin && g.order() <= nmax && is_connected(g)) {
        pool.push_back(std::move(g));
        ++added;
      }
    r.notes.push_back("corpus " + c.corpus + " contributed " + std::to_string(added) + " graphs");
  } else if (nmax > builtin) {
    throw PreconditionError("orders above " + std::to_string(builtin) + " need a graph6 corpus (--corpus)");
  }
  return pool;
}

std::vector<Graph> tree_pool(const SuiteConfig& c, int nmax) {
  std::vector<Graph> out;
  if (!c.graphs.empty()) {
    for (const auto& g : c.graphs)
      if (is_tree(g)) out.push_back(g);
    return out;
  }
  for (int n = 1; n <= nmax; ++n) {
    auto level = enumerate_trees(n, c.limits.tree_enumeration);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int nmax_or(const SuiteConfig& c, int fallback) { return c.nmax < 0 ? fallback : c.nmax; }

void tree_bound(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("tree_bound", r);
  for (const auto& t : tree_pool(c, nmax_or(c, 12))) {
    int k = metric_dimension_exact(t, md_cap_for(c, t)).dimension;
    if (k < 2) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    int d = diameter(t);
    rec.at_most(t, g6(t), "n <= tree bound (d=" + str(d) + ", k=" + str(k) + ")", t.order(), bound_tree(d, k).value);
  }
  r.notes.push_back("paths (metric dimension 1) are outside the theorem and skipped");
}

void tree_equality(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("tree_equality", r);
  const int nmax = nmax_or(c, 12);
  const int iso_cap = c.limits.isomorphism_vertices;
  std::set<std::string> codes;
  long long equal = 0;
  for (const auto& t : tree_pool(c, nmax)) {
    codes.insert(tree_code(t));
    int k = metric_dimension_exact(t, md_cap_for(c, t)).dimension;
    if (k < 2) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    int d = diameter(t);
    if (BigInt(t.order()) != bound_tree(d, k).value) continue;
    ++equal;
    bool match = false;
    if (d % 2 == 0) {
      match = isomorphic(t, gen_HS(d, k).graph, iso_cap);
    } else {
      for (int a = 1; a < k && !match; ++a) match = isomorphic(t, gen_HS(d, k, a).graph, iso_cap);
    }
    if (!match)
      rec.fail(t, "equality tree is a hairy spider (d=" + str(d) + ", k=" + str(k) + ")", "not isomorphic", "HS");
  }
  rec.observe("pool", "trees attaining equality", str(equal), "");

  // Every hairy spider that fits in the pool must attain equality.
  if (!c.graphs.empty()) return;
  for (int d = 2; d <= nmax; ++d)
    for (int k = 2; hs_order(d, k) <= nmax; ++k) {
      std::vector<Extremal> members;
      if (d % 2 == 0) {
        members.push_back(gen_HS(d, k));
      } else {
        if (d < 3) continue;
        for (int a = 1; a < k; ++a) members.push_back(gen_HS(d, k, a));
      }
      for (const auto& e : members) {
        std::string name = e.spec.family + str(d) + "," + str(k) +
                           (e.spec.params.count("a") ? "," + str(e.spec.params.at("a")) : std::string());
        int md = metric_dimension_exact(e.graph, md_cap_for(c, e.graph)).dimension;
        int dm = diameter(e.graph);
        if (md != k || dm != d || BigInt(e.graph.order()) != bound_tree(d, k).value)
          rec.fail(name, "hairy spider attains the tree bound",
                   "n=" + str(e.graph.order()) + " d=" + str(dm) + " k=" + str(md), bound_tree(d, k).value.str(),
                   g6(e.graph));
        if (!codes.count(tree_code(e.graph)))
          rec.fail(name, "hairy spider present in the enumerated pool", "missing", "", g6(e.graph));
      }
    }
}

struct Basics {
  int n, d, k;
  Hypergraph h;
};

Basics basics(const SuiteConfig& c, const Graph& g) {
  return {g.order(), diameter(g), metric_dimension_exact(g, md_cap_for(c, g)).dimension, distance_hypergraph(g)};
}

void mdvstc_sandwich(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("mdvstc_sandwich", r);
  for (const auto& g : graph_pool(c, nmax_or(c, 7), r)) {
    ++r.instances;
    auto b = basics(c, g);
    auto tc = min_test_cover(b.h, c.limits.test_cover_edges);
    const long long t = static_cast<long long>(tc.size());
    if (t - 1 > 1LL * b.d * b.k) rec.fail(g, "(TC-1)/d <= k", "TC=" + str(t), "d*k=" + str(b.d * b.k));
    if (b.k > t) rec.fail(g, "k <= TC", "k=" + str(b.k), "TC=" + str(t));

    auto cert = metric_dimension_exact(g, md_cap_for(c, g));
    auto balls = resolving_to_test_cover(g, cert.set);
    if (static_cast<long long>(balls.size()) != 1LL * b.d * b.k + 1)
      rec.fail(g, "resolving set gives a test cover of size d*k+1", str(balls.size()), str(b.d * b.k + 1));
    std::vector<Ball> chosen;
    for (int e : tc) chosen.push_back(b.h.labels()[e]);
    auto centres = test_cover_to_resolving(g, chosen);
    if (!is_resolving(g, centres) || static_cast<long long>(centres.size()) > t)
      rec.fail(g, "test cover centres resolve", str(centres.size()), str(t));
  }
}

void prop8(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("prop8", r);
  for (const auto& g : graph_pool(c, nmax_or(c, 7), r)) {
    ++r.instances;
    auto b = basics(c, g);
    const long long tc = static_cast<long long>(min_test_cover(b.h, c.limits.test_cover_edges).size());
    const int vcs = vc_dimension(dual(b.h), c.limits.vc_vertices).dimension;
    rec.at_most(g, g6(g), "n <= TC^vc* + 1", b.n, bound_tc_vc(tc, vcs).value);
    const BigInt md_bound = bound_md_vcdim(b.d, b.k, vcs).value;
    if (BigInt(b.n) > md_bound) rec.fail(g, "n <= (dk+1)^dvc* + 1", str(b.n), md_bound.str());
    if (vcs >= 1) {
      try {
        auto w = prop9_witness(b.h, c.limits.vc_vertices);
        if (w.test_cover_size != vcs || w.vertices.size() != (std::size_t{1} << vcs) - 1)
          rec.fail(g, "projected witness has 2^k-1 vertices and TC = k", str(w.test_cover_size), str(vcs));
      } catch (const Error& e) {
        rec.fail(g, "projected witness construction", e.what(), "");
      }
    }
  }
}

void prop10(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("prop10", r);
  long long left_violations = 0;
  int worst_diameter = 0;
  for (const auto& g : graph_pool(c, nmax_or(c, 7), r)) {
    Hypergraph h = distance_hypergraph(g);
    const int dvc = vc_dimension(h, c.limits.vc_vertices).dimension;
    if (dvc < 2) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    const int d = diameter(g);
    const int dvcs = vc_dimension(dual(h), c.limits.vc_vertices).dimension;
    const double left = (dvc - std::log2(static_cast<double>(d))) / std::log2(static_cast<double>(dvc));
    if (left > dvcs + 1e-9) {
      std::ostringstream m;
      m << std::setprecision(12) << left;
      rec.fail(g, "(dvc - log d)/log dvc <= dvc*", m.str(), str(dvcs));
      ++left_violations;
      worst_diameter = std::max(worst_diameter, d);
    }
    if (dvcs > d * dvc) rec.fail(g, "dvc* <= d * dvc", str(dvcs), str(d * dvc));
  }
  rec.observe("pool", "left-inequality violations", str(left_violations), "");
  rec.observe("pool", "largest diameter among violations", str(worst_diameter), "");
  r.notes.push_back("logarithms are base 2 (convention-dependent check); graphs with dvc < 2 skipped");
}

void sauer_shelah(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("sauer_shelah", r);
  std::mt19937_64 rng(c.seed);
  const int count = c.nmax < 0 ? 500 : c.nmax;
  for (int i = 0; i < count; ++i) {
    const int nv = 1 + static_cast<int>(rng() % 12);
    const int max_edges = static_cast<int>(std::min<std::uint64_t>(std::uint64_t{1} << nv, 48));
    const int ne = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges));
    const std::uint64_t density = 1 + rng() % 3;  // in quarters
    Hypergraph h(nv);
    for (int e = 0; e < ne; ++e) {
      Bitset edge(static_cast<std::size_t>(nv));
      for (int v = 0; v < nv; ++v)
        if (rng() % 4 < density) edge.set(static_cast<std::size_t>(v));
      h.add_edge(std::move(edge));
    }
    ++r.instances;
    const int vc = vc_dimension(h, c.limits.vc_vertices).dimension;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> x;
      for (int v = 0; v < nv; ++v)
        if (rng() % 2) x.push_back(v);
      const long long traces = static_cast<long long>(trace(h, x).nedges());
      BigInt bound = 1;
      for (int p = 0; p < vc; ++p) bound *= static_cast<long long>(x.size());
      bound += 1;
      if (BigInt(traces) > bound) {
        std::string id = "hypergraph#" + str(i) + " X=" + str(x.size());
        rec.fail(id, "|trace| <= |X|^vc + 1", str(traces), bound.str(), encode_hypergraph(h));
      }
    }
  }
  r.notes.push_back("seed " + std::to_string(c.seed) + ", 20 random X per hypergraph");
}

void thm14_minor(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("thm14_minor", r);
  long long planar_form_checked = 0, planar_form_held = 0;
  for (const auto& g : graph_pool(c, nmax_or(c, 7), r)) {
    ++r.instances;
    const int s = dual_distance_2vc(g, c.limits.vc2_vertices);
    const int cap = c.limits.minor_block_vertices;
    for (int t = 1; t <= std::min(s, 5); ++t)
      if (!has_clique_minor(g, t, cap))
        rec.fail(g, "dual 2-VC >= t implies a K_t minor (t=" + str(t) + ")", "no K_t minor", "dual 2-VC=" + str(s));

    if (g.order() < 2) continue;
    const int d = diameter(g);
    const int k = metric_dimension_exact(g, md_cap_for(c, g)).dimension;
    int free_t = 0;
    for (int t = 2; t <= 5; ++t)
      if (!has_clique_minor(g, t, cap)) {
        free_t = t;
        break;
      }
    if (free_t > 0) {
      rec.at_most(g, g6(g), "K_t-minor-free bound (t=" + str(free_t) + ")", g.order(), bound_minorfree(d, k, free_t).value);
      ++planar_form_checked;
      BigInt strong = 1;
      for (int p = 0; p < 4; ++p) strong *= (d * k + 1);
      if (BigInt(g.order()) <= strong) ++planar_form_held;
    }
  }
  rec.observe("pool", "K_5-minor-free graphs with n <= (dk+1)^4", str(planar_form_held), str(planar_form_checked));
  r.notes.push_back("t ranges over 1..min(dual 2-VC, 5)");
}

void outerplanar_bound(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("outerplanar_bound", r);
  const int cap = c.limits.minor_block_vertices;
  for (const auto& g : graph_pool(c, nmax_or(c, 7), r)) {
    if (g.order() < 2 || !is_outerplanar(g, cap)) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    int d = diameter(g);
    int k = metric_dimension_exact(g, md_cap_for(c, g)).dimension;
    rec.at_most(g, g6(g), "n <= 2kd^2-2d^2+d+1", g.order(), bound_outerplanar(d, k).value);
  }
  if (!c.graphs.empty()) return;
  for (int d = 4; d <= 8; ++d)
    for (int k = 2; k <= 4; ++k) {
      auto e = gen_O(d, k);
      std::string name = "O" + str(d) + "," + str(k);
      ++r.instances;
      if (!is_outerplanar(e.graph, cap)) rec.fail(name, "O_{d,k} is outerplanar", "false", "true", g6(e.graph));
      int dm = diameter(e.graph);
      int md = metric_dimension_exact(e.graph, md_cap_for(c, e.graph)).dimension;
      rec.at_most(e.graph, name, "n <= 2kd^2-2d^2+d+1", e.graph.order(), bound_outerplanar(dm, md).value);
    }
}

void treedec_bound(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("treedec_bound", r);
  for (const auto& g : graph_pool(c, nmax_or(c, 7), r)) {
    if (g.order() < 2) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    TreeDecomposition td =
        is_chordal(g) ? clique_tree(g) : treewidth_exact(g, c.limits.treewidth_vertices).decomposition;
    td = reduce(g, td);
    const int w = width(td);
    const int l = length(g, td);
    const int d = diameter(g);
    const int k = metric_dimension_exact(g, md_cap_for(c, g)).dimension;
    rec.at_most(g, g6(g), "n <= (2k-1)(d+1)^2(l+1)(2l+1)^(3w)", g.order(), bound_treedec(d, k, w, l).value);
    const BigInt tw_form = bound_treedec_tw(d, k, w).value;
    if (BigInt(g.order()) > tw_form) rec.fail(g, "n <= treedec bound with l = d", str(g.order()), tw_form.str());
    if (auto bad = noncut_internal_bag(g, td))
      rec.fail(g, "internal bags of a reduced decomposition are cutsets", "bag " + str(*bad), "cutset");
  }
  r.notes.push_back("decompositions: clique tree when chordal, else exact treewidth; reduced before measuring");
}

void chordal_obs(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("chordal_obs", r);
  for (const auto& g : graph_pool(c, nmax_or(c, 7), r)) {
    if (!is_chordal(g)) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    auto td = clique_tree(g);
    const int w = width(td);
    const int k = metric_dimension_exact(g, md_cap_for(c, g)).dimension;
    long long three_k = 1;
    for (int i = 0; i < k; ++i) three_k *= 3;
    if (w > three_k) rec.fail(g, "w <= 3^k", str(w), str(three_k));
    if (g.max_degree() + 1 > three_k) rec.fail(g, "|N[v]| <= 3^k", str(g.max_degree() + 1), str(three_k));
    if (g.order() > 1 && length(g, td) > 1) rec.fail(g, "clique tree length <= 1", str(length(g, td)), "1");
  }
}

void check_extremal(const SuiteConfig& c, Recorder& rec, SuiteReport& r, const std::string& name, const Extremal& e) {
  ++r.instances;
  const Graph& g = e.graph;
  if (g.order() != e.spec.order)
    rec.fail(name, "order matches prediction", str(g.order()), str(e.spec.order), g6(g));
  const int dm = diameter(g);
  if (e.spec.diameter && dm != *e.spec.diameter)
    rec.fail(name, "diameter matches prediction", str(dm), str(*e.spec.diameter), g6(g));
  if (e.spec.metric_dimension) {
    const int md = metric_dimension_exact(g, md_cap_for(c, g)).dimension;
    if (md != *e.spec.metric_dimension)
      rec.fail(name, "metric dimension matches prediction", str(md), str(*e.spec.metric_dimension), g6(g));
    if (!e.spec.witness.empty()) {
      if (!is_resolving(g, e.spec.witness))
        rec.fail(name, "tagged witness resolves", "false", "true", g6(g));
      else if (static_cast<int>(e.spec.witness.size()) != md)
        rec.fail(name, "tagged witness is minimum", str(e.spec.witness.size()), str(md), g6(g));
    }
  }
}

void extremal_specs(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("extremal_specs", r);
  const int cap = c.limits.minor_block_vertices;
  for (int rr = 1; rr <= 6; ++rr) check_extremal(c, rec, r, "L" + str(rr), gen_L(rr));
  for (int d = 2; d <= 8; d += 2)
    for (int k = 2; k <= 4; ++k) {
      auto e = gen_HS(d, k);
      std::string name = "HS" + str(d) + "," + str(k);
      check_extremal(c, rec, r, name, e);
      if (!is_tree(e.graph)) rec.fail(name, "hairy spider is a tree", "false", "true", g6(e.graph));
      if (BigInt(e.graph.order()) != bound_tree(d, k).value)
        rec.fail(name, "hairy spider attains the tree bound", str(e.graph.order()), bound_tree(d, k).value.str(),
                 g6(e.graph));
    }
  for (int d = 3; d <= 7; d += 2)
    for (int k = 2; k <= 3; ++k)
      for (int a = 0; a <= k; ++a) {
        auto e = gen_HS(d, k, a);
        std::string name = "HS" + str(d) + "," + str(k) + "," + str(a);
        check_extremal(c, rec, r, name, e);
        if (!is_tree(e.graph)) rec.fail(name, "hairy spider is a tree", "false", "true", g6(e.graph));
      }
  for (int d = 4; d <= 8; ++d)
    for (int k = 2; k <= 4; ++k)
      for (bool chords : {false, true}) {
        auto e = gen_O(d, k, chords);
        std::string name = "O" + str(d) + "," + str(k) + (chords ? "+chords" : "");
        check_extremal(c, rec, r, name, e);
        if (!is_outerplanar(e.graph, cap)) rec.fail(name, "O_{d,k} is outerplanar", "false", "true", g6(e.graph));
        const BigInt b = bound_outerplanar(d, k).value;
        if (BigInt(e.graph.order()) > b) rec.fail(name, "order within outerplanar bound", str(e.graph.order()), b.str(), g6(e.graph));
      }
  r.notes.push_back("grid chain and line example predictions are checked by their own suites");
}

void grid_chain(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("grid_chain", r);
  for (int t = 2; t <= nmax_or(c, 4); ++t) {
    auto e = gen_grid_chain(t);
    std::string name = "grid_chain" + str(t);
    ++r.instances;
    if (e.graph.order() != 1LL * t * t * t) rec.fail(name, "order t^3", str(e.graph.order()), str(t * t * t), g6(e.graph));
    if (!is_resolving(e.graph, e.spec.witness)) rec.fail(name, "declared 3-set resolves", "false", "true", g6(e.graph));
    rec.observe(name, "diameter", str(diameter(e.graph)), str(4 * t));
    if (t == 2 && has_clique_minor(e.graph, 5, c.limits.minor_block_vertices))
      rec.fail(name, "no K_5 minor", "K_5 minor found", "none", g6(e.graph));
  }
  r.notes.push_back("diameter is reported against 4t and does not affect the verdict");
}

void line_example(const SuiteConfig& c, SuiteReport& r) {
  Recorder rec("line_example", r);
  for (int k = 2; k <= nmax_or(c, 5); ++k) {
    auto e = gen_line_example(k, c.limits.line_example_k);
    std::string name = "line_example" + str(k);
    ++r.instances;
    if (e.graph.order() != line_example_order(k))
      rec.fail(name, "order k+2^k-1+sum i*C(k,i)", str(e.graph.order()), str(line_example_order(k)), g6(e.graph));
    const int dm = diameter(e.graph);
    if (dm != 4) rec.fail(name, "diameter 4", str(dm), "4", g6(e.graph));
    if (static_cast<int>(e.spec.witness.size()) != k || !is_resolving(e.graph, e.spec.witness))
      rec.fail(name, "edges e_1..e_k resolve", "false", "true", g6(e.graph));
    const int vc = vc_dimension(closed_neighbourhood_hypergraph(e.graph), c.limits.vc_vertices).dimension;
    if (vc > 4) rec.fail(name, "closed-neighbourhood VC dimension <= 4", str(vc), "4", g6(e.graph));
  }
}

const std::vector<std::pair<std::string, std::function<void(const SuiteConfig&, SuiteReport&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<void(const SuiteConfig&, SuiteReport&)>>> all{
      {"tree_bound", tree_bound},         {"tree_equality", tree_equality},
      {"mdvstc_sandwich", mdvstc_sandwich}, {"prop8", prop8},
      {"prop10", prop10},                 {"sauer_shelah", sauer_shelah},
      {"thm14_minor", thm14_minor},       {"outerplanar_bound", outerplanar_bound},
      {"treedec_bound", treedec_bound},   {"chordal_obs", chordal_obs},
      {"extremal_specs", extremal_specs}, {"grid_chain", grid_chain},
      {"line_example", line_example},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [suite, fn] : suites()) {
    if (suite != name) continue;
    SuiteReport r;
    r.suite = name;
    r.config = {{"nmax", std::to_string(config.nmax)},
                {"corpus", config.corpus},
                {"seed", std::to_string(config.seed)},
                {"explicit_graphs", std::to_string(config.graphs.size())},
                {"minor_block_vertices", std::to_string(config.limits.minor_block_vertices)},
                {"metric_dimension_vertices", std::to_string(config.limits.metric_dimension_vertices)},
                {"vc_vertices", std::to_string(config.limits.vc_vertices)},
                {"vc2_vertices", std::to_string(config.limits.vc2_vertices)},
                {"treewidth_vertices", std::to_string(config.limits.treewidth_vertices)}};
    auto start = std::chrono::steady_clock::now();
    fn(config, r);
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::stable_sort(r.failures.begin(), r.failures.end(),
                     [](const SuiteFailure& a, const SuiteFailure& b) { return a.instance < b.instance; });
    return r;
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

std::string report_json(const SuiteReport& r, bool with_elapsed) {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["instances"] = r.instances;
  j["skipped"] = r.skipped;
  j["max_ratio"] = r.max_ratio;
  j["config"] = r.config;
  j["notes"] = r.notes;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back(
        {{"instance", f.instance}, {"claim", f.claim}, {"measured", f.measured}, {"bound", f.bound}, {"witness", f.witness}});
  j["observations"] = nlohmann::json::array();
  for (const auto& o : r.observations)
    j["observations"].push_back(
        {{"instance", o.instance}, {"quantity", o.quantity}, {"measured", o.measured}, {"reference", o.reference}});
  if (with_elapsed) j["elapsed"] = r.elapsed;
  return j.dump(2);
}

std::string report_table(const SuiteReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "suite" << std::right << std::setw(10) << "instances" << std::setw(9) << "skipped"
     << std::setw(10) << "failures" << std::setw(11) << "max_ratio" << std::setw(10) << "elapsed" << "  verdict\n";
  os << std::left << std::setw(20) << r.suite << std::right << std::setw(10) << r.instances << std::setw(9) << r.skipped
     << std::setw(10) << r.failures.size() << std::setw(11) << std::fixed << std::setprecision(4) << r.max_ratio
     << std::setw(9) << std::setprecision(2) << r.elapsed << "s  " << (r.pass() ? "PASS" : "FAIL") << '\n';
  for (const auto& f : r.failures)
    os << "  FAIL " << f.instance << ": " << f.claim << " (measured " << f.measured << ", bound " << f.bound << ")\n";
  for (const auto& o : r.observations)
    os << "  info " << o.instance << ": " << o.quantity << " = " << o.measured
       << (o.reference.empty() ? "" : " (reference " + o.reference + ")") << '\n';
  for (const auto& n : r.notes) os << "  note " << n << '\n';
  return os.str();
}

}  // namespace metriclab

// metriclab: command-line front end.
//
//   metriclab gen hs --d 6 --k 2
//   metriclab solve md < graph.g6
//   metriclab verify tree_bound --nmax 10 --json -
//
// Exit status: 0 ok, 1 suite failure, 2 usage or input error, 3 instance too large.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "metriclab/bounds.hpp"
#include "metriclab/enumerate.hpp"
#include "metriclab/error.hpp"
#include "metriclab/extremal.hpp"
#include "metriclab/graph_io.hpp"
#include "metriclab/hypergraph.hpp"
#include "metriclab/limits.hpp"
#include "metriclab/resolving.hpp"
#include "metriclab/set_cover.hpp"
#include "metriclab/treedecomp.hpp"
#include "metriclab/verify.hpp"

using namespace metriclab;
using nlohmann::json;

namespace {

struct Options {
  std::string input = "-";
  std::string graph6;
  std::string config;
  std::vector<std::string> overrides;
  std::string format = "graph6";

  // gen
  std::string family;
  int d = -1, k = -1, a = -1, r = -1, t = -1, n = -1;
  bool chords = false;

  // solve / hyper / td
  std::string set;
  std::string decomposition;
  int radius = -1;
  bool closed = false;

  // bound
  std::string bound;
  std::map<std::string, long long> params;

  // verify
  std::string suite;
  int nmax = -1;
  std::string corpus;
  std::uint64_t seed = 20160311;
  std::string json_out;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph input_graph(const Options& o) {
  if (!o.graph6.empty()) return parse_graph6(o.graph6);
  return parse_graph_auto(slurp(o.input));
}

Hypergraph input_hypergraph(const Options& o) {
  if (o.graph6.empty()) {
    std::string text = slurp(o.input);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text.compare(first, 7, "p hyper") == 0) return parse_hypergraph(text);
    return distance_hypergraph(parse_graph_auto(text));
  }
  return distance_hypergraph(parse_graph6(o.graph6));
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw PreconditionError("bad vertex list entry '" + item + "'");
    }
  }
  return out;
}

json edges_json(const Graph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  return e;
}

json certificate_json(const ResolvingCertificate& c) {
  return {{"schema", 1}, {"dimension", c.dimension}, {"set", c.set}, {"vectors", c.vectors}, {"verified", c.verified}};
}

json bags_json(const TreeDecomposition& td) {
  json edges = json::array();
  for (auto [u, v] : td.tree_edges()) edges.push_back({u, v});
  return {{"bags", td.bags()}, {"tree_edges", edges}};
}

json edge_sets_json(const Hypergraph& h) {
  json out = json::array();
  for (const auto& e : h.edges()) {
    std::vector<int> vs;
    e.for_each([&](int v) { vs.push_back(v); });
    out.push_back(vs);
  }
  return out;
}

json vc_json(const VcResult& r) {
  json traces = json::array();
  for (const auto& [subset, edge] : r.witness.traces) traces.push_back({{"subset", subset}, {"edge", edge}});
  return {{"schema", 1},
          {"dimension", r.dimension},
          {"mode", r.witness.mode == ShatterWitness::Mode::full ? "full" : "pairs"},
          {"set", r.witness.set},
          {"traces", traces}};
}

std::string render_graph(const Graph& g, const Options& o, const ExtremalSpec* spec = nullptr) {
  if (o.format == "edges") return encode_edge_list(g);
  if (o.format == "json") {
    json j{{"schema", 1}, {"graph6", encode_graph6(g)}, {"order", g.order()}, {"edges", edges_json(g)}};
    if (spec) {
      j["family"] = spec->family;
      j["params"] = spec->params;
      j["predicted_order"] = spec->order;
      if (spec->diameter) j["predicted_diameter"] = *spec->diameter;
      if (spec->metric_dimension) j["predicted_metric_dimension"] = *spec->metric_dimension;
      j["witness"] = spec->witness;
    }
    return j.dump(2) + "\n";
  }
  return encode_graph6(g) + "\n";
}

void need(int value, const char* flag) {
  if (value < 0) throw PreconditionError(std::string("missing ") + flag);
}

std::string run_gen(const Options& o, const Limits& limits) {
  if (o.family == "trees" || o.family == "connected") {
    need(o.n, "--n");
    auto gs = o.family == "trees" ? enumerate_trees(o.n, limits.tree_enumeration)
                                  : enumerate_connected_graphs(o.n, limits.connected_enumeration);
    std::string out;
    for (const auto& g : gs) out += encode_graph6(g) + "\n";
    return out;
  }
  Extremal e;
  if (o.family == "L") {
    need(o.r, "--r");
    e = gen_L(o.r);
  } else if (o.family == "hs") {
    need(o.d, "--d");
    need(o.k, "--k");
    e = gen_HS(o.d, o.k, o.a);
  } else if (o.family == "o") {
    need(o.d, "--d");
    need(o.k, "--k");
    e = gen_O(o.d, o.k, o.chords);
  } else if (o.family == "grid") {
    need(o.t, "--t");
    e = gen_grid_chain(o.t);
  } else if (o.family == "line") {
    need(o.k, "--k");
    e = gen_line_example(o.k, limits.line_example_k);
  } else {
    throw PreconditionError("unknown family '" + o.family + "'");
  }
  return render_graph(e.graph, o, &e.spec);
}

std::string run_solve(const std::string& what, const Options& o, const Limits& limits) {
  Graph g = input_graph(o);
  if (what == "md") {
    SetCoverStats stats;
    auto c = metric_dimension_exact(g, limits.metric_dimension_vertices, &stats);
    json j = certificate_json(c);
    j["nodes"] = stats.nodes;
    return j.dump() + "\n";
  }
  if (what == "tree-md") return certificate_json(tree_metric_dimension(g)).dump() + "\n";
  auto s = parse_list(o.set);
  for (int v : s)
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  json j{{"schema", 1}, {"set", s}, {"resolving", is_resolving(g, s)}};
  return j.dump() + "\n";
}

std::string run_hyper(const std::string& what, const Options& o, const Limits& limits) {
  if (what == "dhg") {
    Graph g = input_graph(o);
    Hypergraph h = o.closed ? closed_neighbourhood_hypergraph(g)
                   : o.radius >= 0 ? distance_hypergraph_fixed_radius(g, o.radius)
                                   : distance_hypergraph(g);
    return encode_hypergraph(h);
  }
  Hypergraph h = input_hypergraph(o);
  if (what == "vc") return vc_json(vc_dimension(h, limits.vc_vertices)).dump() + "\n";
  if (what == "vc2") return vc_json(vc2_dimension(h, limits.vc2_vertices)).dump() + "\n";
  if (what == "dual") return encode_hypergraph(dual(h));
  if (what == "tc") {
    if (!is_twin_free(h) || !covers_all_vertices(h)) {
      json j{{"schema", 1}, {"exists", false}};
      return j.dump() + "\n";
    }
    auto cover = min_test_cover(h, limits.test_cover_edges);
    json j{{"schema", 1}, {"exists", true}, {"size", cover.size()}, {"edges", cover}};
    return j.dump() + "\n";
  }
  auto w = prop9_witness(h, limits.vc_vertices);
  json j{{"schema", 1},
         {"dual_vc", w.dual_vc},
         {"family", w.family},
         {"vertices", w.vertices},
         {"projected_edges", edge_sets_json(w.projected)},
         {"test_cover_size", w.test_cover_size}};
  return j.dump() + "\n";
}

TreeDecomposition input_decomposition(const Options& o, const Graph& g) {
  if (o.decomposition.empty()) throw PreconditionError("missing --td FILE");
  auto pace = parse_pace(slurp(o.decomposition));
  if (pace.nverts != g.order())
    throw PreconditionError("decomposition declares " + std::to_string(pace.nverts) + " vertices, graph has " +
                            std::to_string(g.order()));
  return pace.td;
}

std::string run_td(const std::string& what, const Options& o, const Limits& limits) {
  Graph g = input_graph(o);
  if (what == "cliquetree") {
    if (!is_chordal(g)) throw PreconditionError("clique tree requires a chordal graph");
    return encode_pace(clique_tree(g), g.order());
  }
  if (what == "tw") {
    auto r = treewidth_exact(g, limits.treewidth_vertices);
    if (o.format == "json") {
      json j = bags_json(r.decomposition);
      j["schema"] = 1;
      j["width"] = r.width;
      j["order"] = r.order;
      return j.dump() + "\n";
    }
    return encode_pace(r.decomposition, g.order());
  }
  TreeDecomposition td = input_decomposition(o, g);
  if (what == "validate") {
    json v = json::array();
    for (const auto& x : validate(g, td))
      v.push_back({{"kind", kind_name(x.kind)}, {"message", x.message}, {"witness", x.witness}});
    json j{{"schema", 1}, {"valid", v.empty()}, {"violations", v}};
    return j.dump() + "\n";
  }
  if (!is_valid(g, td)) throw PreconditionError("decomposition is invalid (run 'td validate')");
  if (what == "width") return json{{"schema", 1}, {"width", width(td)}}.dump() + "\n";
  if (what == "length") return json{{"schema", 1}, {"length", length(g, td)}}.dump() + "\n";
  return encode_pace(reduce(g, td), g.order());
}

std::string run_bound(const Options& o) {
  auto b = evaluate_bound(o.bound, o.params);
  json j{{"schema", 1},
         {"name", b.name},
         {"params", b.params},
         {"value", b.value.str()},
         {"form", b.form == BoundValue::Form::exact ? "exact" : "proof_constant"}};
  return j.dump() + "\n";
}

int run_verify(const Options& o, const Limits& limits, std::string& out) {
  SuiteConfig config;
  config.nmax = o.nmax;
  config.corpus = o.corpus;
  config.seed = o.seed;
  config.limits = limits;
  if (!o.graph6.empty()) config.graphs.push_back(parse_graph6(o.graph6));

  std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  bool pass = true;
  json reports = json::array();
  std::string table;
  for (const auto& name : names) {
    auto report = run_suite(name, config);
    pass = pass && report.pass();
    reports.push_back(json::parse(report_json(report)));
    table += report_table(report);
  }
  json doc = names.size() == 1 ? reports[0] : json{{"schema", 1}, {"reports", reports}};
  if (o.json_out == "-") {
    out = doc.dump(2) + "\n";
  } else {
    if (!o.json_out.empty()) {
      std::ofstream f(o.json_out);
      if (!f) throw PreconditionError("cannot write '" + o.json_out + "'");
      f << doc.dump(2) << '\n';
    }
    out = table;
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Metric dimension, distance hypergraphs and tree decompositions at desk scale"};
  app.require_subcommand(1);
  app.add_option("--config", o.config, "key=value file of search caps");
  app.add_option("--cap", o.overrides, "cap override key=value (repeatable, applied after --config)");

  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("--in", o.input, "input file (graph6 or edge list; '-' for stdin)");
    sub->add_option("--graph6", o.graph6, "inline graph6 string instead of --in");
  };

  auto* gen = app.add_subcommand("gen", "generate an extremal family member or an enumeration");
  gen->add_option("family", o.family, "L | hs | o | grid | line | trees | connected")
      ->required()
      ->check(CLI::IsMember({"L", "hs", "o", "grid", "line", "trees", "connected"}));
  gen->add_option("--d", o.d, "diameter");
  gen->add_option("--k", o.k, "metric dimension");
  gen->add_option("--a", o.a, "odd-diameter split (0..k)");
  gen->add_option("--r", o.r, "comb size");
  gen->add_option("--t", o.t, "grid chain length");
  gen->add_option("--n", o.n, "order for trees / connected");
  gen->add_flag("--chords", o.chords, "add the optional chords of O_{d,k}");
  gen->add_option("--format", o.format, "graph6 | edges | json")->check(CLI::IsMember({"graph6", "edges", "json"}));

  std::string solve_what, hyper_what, td_what;
  auto* solve = app.add_subcommand("solve", "metric dimension solvers");
  solve->add_option("what", solve_what, "md | tree-md | resolving-check")
      ->required()
      ->check(CLI::IsMember({"md", "tree-md", "resolving-check"}));
  solve->add_option("--set", o.set, "comma-separated vertices for resolving-check");
  graph_input(solve);

  auto* hyper = app.add_subcommand("hyper", "hypergraph operations (input: graph or 'p hyper' text)");
  hyper->add_option("what", hyper_what, "dhg | vc | vc2 | dual | tc | prop9")
      ->required()
      ->check(CLI::IsMember({"dhg", "vc", "vc2", "dual", "tc", "prop9"}));
  hyper->add_option("--radius", o.radius, "dhg: balls of this radius only");
  hyper->add_flag("--closed", o.closed, "dhg: closed neighbourhoods");
  graph_input(hyper);

  auto* td = app.add_subcommand("td", "tree decompositions (PACE .td format)");
  td->add_option("what", td_what, "validate | width | length | reduce | cliquetree | tw")
      ->required()
      ->check(CLI::IsMember({"validate", "width", "length", "reduce", "cliquetree", "tw"}));
  td->add_option("--td", o.decomposition, "decomposition file");
  td->add_option("--format", o.format, "tw: pace | json")->check(CLI::IsMember({"graph6", "pace", "json"}));
  graph_input(td);

  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound exactly");
  bound->add_option("name", o.bound, "bound name")->required()->check(CLI::IsMember(bound_names()));
  for (const char* key : {"d", "k", "w", "l", "t", "r", "tc", "vc"}) {
    bound->add_option_function<long long>(
        std::string("--") + key, [&o, key](long long v) { o.params[key] = v; }, std::string("parameter ") + key);
  }

  auto* verify = app.add_subcommand("verify", "run a claim suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "suite name or 'all'")->required()->check(CLI::IsMember(suites));
  verify->add_option("--nmax", o.nmax, "largest order (or instance count for sauer_shelah)");
  verify->add_option("--corpus", o.corpus, "graph6 corpus for orders beyond the built-in enumeration");
  verify->add_option("--seed", o.seed, "PRNG seed for randomized suites");
  verify->add_option("--json", o.json_out, "write the JSON report here ('-' for stdout)");
  verify->add_option("--graph6", o.graph6, "replay a single instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string out;
  int status = 0;
  try {
    Limits limits = Limits::from_environment();
    if (!o.config.empty()) limits.apply_config_text(slurp(o.config));
    for (const auto& kv : o.overrides) limits.apply_config_text(kv);

    if (*gen) {
      out = run_gen(o, limits);
    } else if (*solve) {
      out = run_solve(solve_what, o, limits);
    } else if (*hyper) {
      out = run_hyper(hyper_what, o, limits);
    } else if (*td) {
      out = run_td(td_what, o, limits);
    } else if (*bound) {
      out = run_bound(o);
    } else {
      status = run_verify(o, limits, out);
    }
  } catch (const InstanceTooLarge& e) {
    std::cerr << "metriclab: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "metriclab: " << e.what() << '\n';
    return 2;
  }
  std::cout << out;
  return status;
}

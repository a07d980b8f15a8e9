#include "metriclab/limits.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "metriclab/error.hpp"

namespace metriclab {
namespace {

int parse_cap(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size() || v < 0 || v > 1'000'000) throw std::invalid_argument(value);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw PreconditionError("invalid value for " + key + ": '" + value + "'");
  }
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  if (const char* v = std::getenv("METRICLAB_MAXN"); v != nullptr && *v != '\0')
    l.metric_dimension_vertices = parse_cap("METRICLAB_MAXN", v);
  return l;
}

void Limits::apply_config_text(const std::string& text) {
  std::map<std::string, int*> fields{
      {"minor_block_vertices", &minor_block_vertices},
      {"isomorphism_vertices", &isomorphism_vertices},
      {"metric_dimension_vertices", &metric_dimension_vertices},
      {"vc_vertices", &vc_vertices},
      {"vc2_vertices", &vc2_vertices},
      {"test_cover_edges", &test_cover_edges},
      {"treewidth_vertices", &treewidth_vertices},
      {"tree_enumeration", &tree_enumeration},
      {"connected_enumeration", &connected_enumeration},
      {"line_example_k", &line_example_k},
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw PreconditionError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    auto it = fields.find(key);
    if (it == fields.end()) throw PreconditionError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    *it->second = parse_cap(key, value);
  }
}

}  // namespace metriclab

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "metriclab/graph.hpp"
#include "metriclab/limits.hpp"

namespace metriclab {

struct SuiteConfig {
  int nmax = -1;  // suite default when negative
  std::string corpus;  // graph6 file extending graph pools beyond built-in enumeration
  std::vector<Graph> graphs;  // explicit pool; replaces enumeration when nonempty
  std::uint64_t seed = 20160311;
  Limits limits;
};

struct SuiteFailure {
  std::string instance;  // graph6 or generator name
  std::string claim;
  std::string measured;
  std::string bound;
  std::string witness;  // graph6 of the offending graph
};

// Reported quantity that does not decide the verdict.
struct Observation {
  std::string instance;
  std::string quantity;
  std::string measured;
  std::string reference;
};

struct SuiteReport {
  std::string suite;
  long long instances = 0;
  long long skipped = 0;
  std::vector<SuiteFailure> failures;
  std::vector<Observation> observations;
  std::vector<std::string> notes;
  double max_ratio = 0.0;  // largest n / bound seen
  double elapsed = 0.0;
  std::map<std::string, std::string> config;

  bool pass() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
// Throws PreconditionError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

// JSON with "schema": 1. Without elapsed the output is byte-identical for
// identical configurations.
std::string report_json(const SuiteReport& r, bool with_elapsed = true);
std::string report_table(const SuiteReport& r);

}  // namespace metriclab

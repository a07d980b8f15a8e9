#pragma once

#include <string>

namespace metriclab {

// Desk-scale caps shared by the exact searches. Every search that would
// exceed its cap throws InstanceTooLarge.
struct Limits {
  // Vertices per biconnected block after safe reductions in minor search.
  int minor_block_vertices = 14;
  int isomorphism_vertices = 20;
  int metric_dimension_vertices = 64;
  // Hypergraph vertices for VC search (bounded polynomially by edge count).
  int vc_vertices = 256;
  // Hypergraph vertices for 2-VC search (no polynomial bound on the search).
  int vc2_vertices = 96;
  int test_cover_edges = 512;
  int treewidth_vertices = 18;
  int tree_enumeration = 16;
  int connected_enumeration = 7;
  int line_example_k = 8;

  // Defaults, with METRICLAB_MAXN (if set) overriding the metric dimension
  // cap.
  static Limits from_environment();

  // Applies "key=value" lines; unknown keys throw PreconditionError.
  void apply_config_text(const std::string& text);
};

}  // namespace metriclab

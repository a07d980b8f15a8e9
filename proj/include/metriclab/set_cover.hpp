#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metriclab/bitset.hpp"

namespace metriclab {

struct SetCoverStats {
  long long nodes = 0;
  std::size_t dominated = 0;  // candidates removed at the root
  std::size_t greedy_size = 0;
};

// Minimum set cover of {0..universe-1} by the given candidates, or nullopt
// if the union misses an element. Exact branch and bound: greedy upper
// bound, max(ceil(|U|/max gain), disjoint-candidate packing) lower bound,
// root elimination of dominated candidates, branching on the uncovered
// element with fewest candidates. Ties break by gain then lowest index, so
// the result is deterministic. Returned indices are sorted.
std::optional<std::vector<int>> min_set_cover(const std::vector<Bitset>& candidates, std::size_t universe,
                                              SetCoverStats* stats = nullptr);

}  // namespace metriclab

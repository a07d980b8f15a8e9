#include "metriclab/set_cover.hpp"

#include <algorithm>

namespace metriclab {
namespace {

class Solver {
 public:
  Solver(const std::vector<Bitset>& cands, std::size_t universe, std::vector<int> live)
      : cands_(cands), universe_(universe), live_(std::move(live)) {
    const std::size_t m = live_.size();
    elem_cands_.assign(universe_, Bitset(m));
    for (std::size_t j = 0; j < m; ++j)
      cands_[live_[j]].for_each([&](std::size_t e) { elem_cands_[e].set(j); });
    for (std::size_t e = 0; e < universe_; ++e) packing_order_.push_back(e);
    std::stable_sort(packing_order_.begin(), packing_order_.end(),
                     [&](std::size_t a, std::size_t b) { return elem_cands_[a].count() < elem_cands_[b].count(); });
  }

  std::vector<int> run(std::vector<int> upper, long long& nodes) {
    best_ = std::move(upper);
    Bitset covered(universe_);
    Bitset excluded(live_.size());
    std::vector<int> chosen;
    dfs(covered, excluded, chosen);
    nodes = nodes_;
    return best_;
  }

 private:
  std::size_t lower_bound(const Bitset& uncovered, const Bitset& excluded) const {
    std::size_t need = uncovered.count();
    if (need == 0) return 0;
    std::size_t max_gain = 0;
    for (std::size_t j = 0; j < live_.size(); ++j)
      if (!excluded.test(j)) max_gain = std::max(max_gain, cands_[live_[j]].intersection_count(uncovered));
    if (max_gain == 0) return universe_ + 1;
    std::size_t by_gain = (need + max_gain - 1) / max_gain;

    std::size_t packed = 0;
    Bitset used(live_.size());
    for (std::size_t e : packing_order_) {
      if (!uncovered.test(e)) continue;
      Bitset allowed = elem_cands_[e] - excluded;
      if (!allowed.intersects(used)) {
        ++packed;
        used |= allowed;
      }
    }
    return std::max(by_gain, packed);
  }

  void dfs(Bitset& covered, Bitset& excluded, std::vector<int>& chosen) {
    ++nodes_;
    Bitset uncovered = Bitset::full(universe_) - covered;
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + lower_bound(uncovered, excluded) >= best_.size()) return;

    std::size_t pick = universe_;
    std::size_t fewest = live_.size() + 1;
    uncovered.for_each([&](std::size_t e) {
      std::size_t c = elem_cands_[e].count() - elem_cands_[e].intersection_count(excluded);
      if (c < fewest) {
        fewest = c;
        pick = e;
      }
    });
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> options;  // (gain, live index)
    (elem_cands_[pick] - excluded).for_each([&](std::size_t j) {
      options.emplace_back(cands_[live_[j]].intersection_count(uncovered), j);
    });
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    std::vector<std::size_t> newly_excluded;
    for (auto [gain, j] : options) {
      Bitset saved = covered;
      covered |= cands_[live_[j]];
      chosen.push_back(live_[j]);
      dfs(covered, excluded, chosen);
      chosen.pop_back();
      covered = saved;
      excluded.set(j);
      newly_excluded.push_back(j);
      if (chosen.size() + 1 >= best_.size()) break;
    }
    for (std::size_t j : newly_excluded) excluded.reset(j);
  }

  const std::vector<Bitset>& cands_;
  std::size_t universe_;
  std::vector<int> live_;
  std::vector<Bitset> elem_cands_;
  std::vector<std::size_t> packing_order_;
  std::vector<int> best_;
  long long nodes_ = 0;
};

}  // namespace

std::optional<std::vector<int>> min_set_cover(const std::vector<Bitset>& candidates, std::size_t universe,
                                              SetCoverStats* stats) {
  const int m = static_cast<int>(candidates.size());
  Bitset all(universe);
  for (const auto& c : candidates) all |= c;
  if (all.count() != universe) return std::nullopt;
  if (universe == 0) return std::vector<int>{};

  std::vector<int> live;
  for (int i = 0; i < m; ++i) {
    if (candidates[i].none()) continue;
    bool dominated = false;
    for (int j = 0; j < m && !dominated; ++j) {
      if (j == i || !candidates[i].is_subset_of(candidates[j])) continue;
      if (candidates[i] != candidates[j] || j < i) dominated = true;
    }
    if (!dominated) live.push_back(i);
  }

  std::vector<int> greedy;
  Bitset covered(universe);
  while (covered.count() != universe) {
    int pick = -1;
    std::size_t gain = 0;
    Bitset uncovered = Bitset::full(universe) - covered;
    for (int i : live) {
      std::size_t g = candidates[i].intersection_count(uncovered);
      if (g > gain) {
        gain = g;
        pick = i;
      }
    }
    greedy.push_back(pick);
    covered |= candidates[pick];
  }

  Solver solver(candidates, universe, live);
  long long nodes = 0;
  auto best = solver.run(greedy, nodes);
  std::sort(best.begin(), best.end());
  if (stats) {
    stats->nodes = nodes;
    stats->dominated = static_cast<std::size_t>(m) - live.size();
    stats->greedy_size = greedy.size();
  }
  return best;
}

}  // namespace metriclab

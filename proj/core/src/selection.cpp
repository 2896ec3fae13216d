#include "csmd/selection.hpp"

#include <algorithm>

#include "csmd/error.hpp"

namespace csmd {

namespace {

void finish(SelectionSets& sets, std::size_t arms) {
  const std::size_t last = arms - 1;
  if (sets.b_low.empty() || sets.b_low.front() != 0) sets.b_low.insert(sets.b_low.begin(), 0);
  if (sets.b_high.empty() || sets.b_high.back() != last) sets.b_high.push_back(last);
  std::set_intersection(sets.b_low.begin(), sets.b_low.end(), sets.b_high.begin(),
                        sets.b_high.end(), std::back_inserter(sets.intersection));
  sets.chosen = sets.intersection.empty() ? last : std::min(sets.intersection.front(), last);
}

void check_shape(std::span<const double> costs, const PairMatrix<double>& optimistic) {
  if (costs.empty()) throw ConfigError("selection needs at least one arm");
  if (optimistic.size() != costs.size()) {
    throw ConfigError("optimistic estimate matrix does not match the number of arms");
  }
}

}  // namespace

SelectionSets compute_sets(std::span<const double> costs, const PairMatrix<double>& optimistic) {
  check_shape(costs, optimistic);
  const std::size_t k = costs.size();
  SelectionSets sets;
  for (std::size_t i = 0; i < k; ++i) {
    bool low = true;
    for (std::size_t j = 0; j < i && low; ++j) {
      low = costs[i] - costs[j] <= optimistic(j, i);
    }
    if (low) sets.b_low.push_back(i);

    bool high = true;
    for (std::size_t j = i + 1; j < k && high; ++j) {
      high = costs[j] - costs[i] > optimistic(i, j);
    }
    if (high) sets.b_high.push_back(i);
  }
  finish(sets, k);
  return sets;
}

SelectionSets compute_subset_sets(std::span<const double> costs,
                                  const PairMatrix<double>& optimistic) {
  check_shape(costs, optimistic);
  const std::size_t n = costs.size();
  SelectionSets sets;
  for (std::size_t i = 0; i < n; ++i) {
    bool low = true;
    bool high = true;
    for (std::size_t j = 0; j < n && (low || high); ++j) {
      if (j == i) continue;
      if (costs[i] >= costs[j]) {
        low = low && costs[i] - costs[j] <= optimistic(i, j);
      } else {
        high = high && costs[j] - costs[i] > optimistic(i, j);
      }
    }
    if (low) sets.b_low.push_back(i);
    if (high) sets.b_high.push_back(i);
  }
  finish(sets, n);
  return sets;
}

}  // namespace csmd

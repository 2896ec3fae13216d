#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace csmd {

struct Instance;

inline constexpr std::size_t kDefaultSubsetCap = 12;

/// Arm ordering for combinatorial mode.
///
/// Arms are the 2^K - 1 nonempty feature subsets sorted by non-decreasing effective cost;
/// equal costs go to the larger subset first, then to the larger bitmask.
struct SubsetIndexing {
  std::size_t features = 0;
  /// Feature bitmask of each arm (bit k is feature k+1).
  std::vector<std::uint32_t> mask;
  std::vector<double> raw_cost;
  std::vector<double> effective_cost;
  /// arm_of_mask[m - 1] is the arm whose bitmask is m.
  std::vector<std::size_t> arm_of_mask;
  /// basic_arms[s] lists, ascending, every arm whose bitmask is a nonempty subset of mask[s].
  std::vector<std::vector<std::size_t>> basic_arms;

  std::size_t arm_count() const noexcept { return mask.size(); }
  std::size_t arm_of(std::uint32_t bitmask) const { return arm_of_mask.at(bitmask - 1); }
};

/// Builds the indexing from per-feature costs and per-bitmask lambda (length 2^K - 1).
/// Throws CapacityError when K exceeds `cap`.
SubsetIndexing enumerate_subsets(const std::vector<double>& feature_costs,
                                 const std::vector<double>& lambda_by_mask,
                                 std::size_t cap = kDefaultSubsetCap);

SubsetIndexing enumerate_subsets(const Instance& instance, std::size_t cap = kDefaultSubsetCap);

}  // namespace csmd

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "csmd/instance.hpp"
#include "csmd/subsets.hpp"

namespace csmd {

/// How the learner's arms map onto environment output coordinates and which arms'
/// outputs are revealed when an arm is played.
struct ArmLayout {
  Mode mode = Mode::cascade;
  EffectiveCosts costs;
  /// coordinate[s]: environment output coordinate holding arm s's prediction.
  std::vector<std::size_t> coordinate;
  /// observable[s]: arms revealed when s is played (cascade prefix or basic arms), ascending.
  std::vector<std::vector<std::size_t>> observable;
  /// Feature bitmask per arm (combinatorial only).
  std::vector<std::uint32_t> mask;

  std::size_t arm_count() const noexcept { return coordinate.size(); }
};

ArmLayout make_layout(const Instance& instance, std::size_t subset_cap = kDefaultSubsetCap);

/// Reorders per-coordinate values into arm order.
std::vector<double> to_arm_order(const ArmLayout& layout, const std::vector<double>& by_coordinate);

}  // namespace csmd

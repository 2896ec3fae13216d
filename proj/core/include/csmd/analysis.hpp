#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "csmd/instance.hpp"
#include "csmd/layout.hpp"
#include "csmd/pair_matrix.hpp"

namespace csmd {

/// Ground truth for an instance, everything in arm order.
struct InstanceAnalysis {
  Mode mode = Mode::cascade;
  std::vector<double> raw_cost;
  std::vector<double> effective_cost;
  std::vector<double> gamma;
  /// effective_cost + gamma.
  std::vector<double> total;
  PairMatrix<double> disagreement;
  std::size_t optimal_arm = 0;
  double wd_margin = 0.0;
  /// Unset for combinatorial instances, where no cascade order exists.
  std::optional<bool> sd_holds;
  /// Error rates and disagreements are trace frequencies, not exact values.
  bool estimated = false;
  /// Feature bitmask per arm (combinatorial only).
  std::vector<std::uint32_t> mask;

  bool weak_dominance() const noexcept { return wd_margin > 0.0; }
};

InstanceAnalysis analyze(const Instance& instance, const ArmLayout& layout);
InstanceAnalysis analyze(const Instance& instance);

}  // namespace csmd

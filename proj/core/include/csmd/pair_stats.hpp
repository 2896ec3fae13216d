#pragma once

#include <cstddef>
#include <cstdint>

#include "csmd/pair_matrix.hpp"

namespace csmd {

/// Sufficient statistics for one unordered arm pair.
/// successes/failures include the Beta(1, 1) prior; disagreements/comparisons do not.
struct PairCounts {
  std::uint32_t successes = 1;
  std::uint32_t failures = 1;
  std::uint32_t disagreements = 0;
  std::uint32_t comparisons = 0;
};

/// Per-pair counters shared by the Thompson-sampling and UCB-family policies.
class PairStats {
 public:
  PairStats() = default;
  explicit PairStats(std::size_t arms) : counts_(arms) {}

  std::size_t arms() const noexcept { return counts_.size(); }

  void record(std::size_t i, std::size_t j, bool disagree) noexcept {
    PairCounts& c = counts_(i, j);
    if (disagree) {
      ++c.successes;
      ++c.disagreements;
    } else {
      ++c.failures;
    }
    ++c.comparisons;
  }

  const PairCounts& operator()(std::size_t i, std::size_t j) const noexcept { return counts_(i, j); }
  PairCounts& operator()(std::size_t i, std::size_t j) noexcept { return counts_(i, j); }

  /// D / N; 0 for a pair never compared.
  double empirical(std::size_t i, std::size_t j) const noexcept {
    const PairCounts& c = counts_(i, j);
    return c.comparisons == 0 ? 0.0
                              : static_cast<double>(c.disagreements) / c.comparisons;
  }

  const PairMatrix<PairCounts>& matrix() const noexcept { return counts_; }

 private:
  PairMatrix<PairCounts> counts_;
};

}  // namespace csmd

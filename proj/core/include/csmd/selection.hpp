#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csmd/pair_matrix.hpp"

namespace csmd {

/// Candidate sets for one round. All indices are 0-based arm indices, ascending.
struct SelectionSets {
  std::vector<std::size_t> b_low;
  std::vector<std::size_t> b_high;
  std::vector<std::size_t> intersection;
  std::size_t chosen = 0;
};

/// Cascade rule over arms ordered by index:
///   b_low  = {i : C_i - C_j <= p(j, i) for all j < i} + {first arm}
///   b_high = {i : C_j - C_i >  p(i, j) for all j > i} + {last arm}
///   chosen = min(b_low & b_high + {last arm})
/// Comparisons are exact; no epsilon.
SelectionSets compute_sets(std::span<const double> effective_costs,
                           const PairMatrix<double>& optimistic);

/// Subset rule, where the comparison range is defined by cost rather than index:
///   b_low  = {i : C_i - C_j <= p(i, j) for all j != i with C_i >= C_j} + {first arm}
///   b_high = {i : C_j - C_i >  p(i, j) for all j != i with C_i <  C_j} + {last arm}
SelectionSets compute_subset_sets(std::span<const double> effective_costs,
                                  const PairMatrix<double>& optimistic);

}  // namespace csmd

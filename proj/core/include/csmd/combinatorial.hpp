#pragma once

#include <memory>

#include "csmd/policy.hpp"
#include "csmd/selection.hpp"
#include "csmd/subsets.hpp"

namespace csmd {

// Combinatorial policies: one arm per nonempty feature subset. Playing arm s reveals
// the outputs of its basic arms (every arm whose features are a subset of s's).

SelectionSets compute_subset_sets(const SubsetIndexing& indexing,
                                  const PairMatrix<double>& optimistic);

/// Combinatorial Thompson sampling; Beta(1, 1) prior, no forced first pull.
std::unique_ptr<OptimisticPolicy> make_csmd_cts(const SubsetIndexing& indexing);

/// ESCB-style policy with a kl-UCB (`param` = a) or UCB1 (`param` = alpha) index.
/// Round 1 plays arm N_S and observes every arm.
std::unique_ptr<OptimisticPolicy> make_csmd_escb(const SubsetIndexing& indexing,
                                                 Estimator index, double param);

}  // namespace csmd

#pragma once

#include <memory>
#include <span>

#include "csmd/policy.hpp"
#include "csmd/selection.hpp"

namespace csmd {

// Cascade policies: arm i uses features 1..i, and playing arm i reveals arms 1..i.

/// Thompson sampling with a Beta(1, 1) prior per pair; no forced first pull.
std::unique_ptr<OptimisticPolicy> make_csmd_ts(std::span<const double> effective_costs);

/// kl-UCB index with exploration budget log t + a log log t; round 1 plays arm K.
std::unique_ptr<OptimisticPolicy> make_csmd_kl(std::span<const double> effective_costs,
                                               double a = 0.0);

/// UCB1 index p_hat + sqrt(alpha log t / N); round 1 plays arm K.
std::unique_ptr<OptimisticPolicy> make_csmd_ucb(std::span<const double> effective_costs,
                                                double alpha = 0.51);

}  // namespace csmd

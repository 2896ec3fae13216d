#pragma once

#include <cstdint>

#include "csmd/random.hpp"

namespace csmd {

/// Bernoulli Kullback-Leibler divergence d(p, q) in nats.
/// Uses 0 log(0/x) = 0 and returns +infinity when q is 0 or 1 and p != q.
/// Throws std::domain_error outside [0, 1].
double bernoulli_kl(double p, double q);

/// log t + a log log t. Not floored: for a > 0 and t < e it is smaller than log t.
double kl_exploration_budget(std::uint64_t t, double a);

/// Largest q in [p_hat, 1] with n * d(p_hat, q) <= log t + a log log t.
/// Bisection to 1e-9 (at most 100 halvings). A non-positive budget returns p_hat.
double kl_ucb_index(double p_hat, std::uint64_t n, std::uint64_t t, double a = 0.0);

/// Largest q in [p_hat, 1] with n * d(p_hat, q) <= budget.
double kl_ucb_index_for_budget(double p_hat, std::uint64_t n, double budget);

/// min(1, p_hat + sqrt(alpha log t / n)).
double ucb1_index(double p_hat, std::uint64_t n, std::uint64_t t, double alpha = 0.51);

/// One draw from Beta(successes, failures).
double ts_sample(std::uint64_t successes, std::uint64_t failures, Engine& engine);

}  // namespace csmd

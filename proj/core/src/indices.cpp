#include "csmd/indices.hpp"

#include <boost/random/beta_distribution.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace csmd {

namespace {

constexpr double kBisectionTolerance = 1e-9;
constexpr int kBisectionMaxIterations = 100;

double xlogy_ratio(double x, double num, double den) {
  // x * log(num / den) with the 0 log 0 = 0 convention.
  if (x == 0.0) return 0.0;
  return x * std::log(num / den);
}

}  // namespace

double bernoulli_kl(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("bernoulli_kl: arguments must lie in [0, 1]");
  }
  if (p == q) return 0.0;
  if (q == 0.0 || q == 1.0) return std::numeric_limits<double>::infinity();
  const double d = xlogy_ratio(p, p, q) + xlogy_ratio(1.0 - p, 1.0 - p, 1.0 - q);
  return d < 0.0 ? 0.0 : d;
}

double kl_exploration_budget(std::uint64_t t, double a) {
  const double log_t = std::log(static_cast<double>(t));
  if (a == 0.0) return log_t;
  return log_t + a * std::log(log_t);
}

double kl_ucb_index(double p_hat, std::uint64_t n, std::uint64_t t, double a) {
  return kl_ucb_index_for_budget(p_hat, n, kl_exploration_budget(t, a));
}

double kl_ucb_index_for_budget(double p_hat, std::uint64_t n, double budget) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw std::domain_error("kl_ucb_index: p_hat must lie in [0, 1]");
  }
  if (n == 0) throw std::domain_error("kl_ucb_index: n must be positive");
  if (p_hat == 1.0) return 1.0;
  const double level = budget / static_cast<double>(n);
  if (!(level > 0.0)) return p_hat;

  // d(p_hat, .) is increasing on [p_hat, 1] and infinite at 1 when p_hat < 1,
  // so the feasible set is [p_hat, root).
  double lo = p_hat;
  double hi = 1.0;
  for (int it = 0; it < kBisectionMaxIterations && hi - lo > kBisectionTolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bernoulli_kl(p_hat, mid) <= level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double ucb1_index(double p_hat, std::uint64_t n, std::uint64_t t, double alpha) {
  if (n == 0) throw std::domain_error("ucb1_index: n must be positive");
  const double bonus =
      std::sqrt(alpha * std::log(static_cast<double>(t)) / static_cast<double>(n));
  const double index = p_hat + bonus;
  return index > 1.0 ? 1.0 : (index < 0.0 ? 0.0 : index);
}

double ts_sample(std::uint64_t successes, std::uint64_t failures, Engine& engine) {
  boost::random::beta_distribution<double> beta(static_cast<double>(successes),
                                                static_cast<double>(failures));
  return beta(engine);
}

}  // namespace csmd

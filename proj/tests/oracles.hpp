#pragma once

// Test-only reference computations. Nothing here calls into the code paths it checks:
// error rates and disagreements are recomputed from raw PMF rows, the optimal arm is
// found by exhaustive set enumeration, and kl indices by a fixed-step grid scan.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "csmd/instance.hpp"
#include "csmd/presets.hpp"

namespace csmd::oracle {

inline double kl(double p, double q) {
  auto term = [](double x, double y) { return x == 0.0 ? 0.0 : x * std::log(x / y); };
  if (p == q) return 0.0;
  if (q <= 0.0 || q >= 1.0) return std::numeric_limits<double>::infinity();
  return term(p, q) + term(1.0 - p, 1.0 - q);
}

/// Largest q on the grid p_hat + k * step (k = 0, 1, ...) within [p_hat, 1] satisfying
/// n * d(p_hat, q) <= log t + a log log t. Returns p_hat for a non-positive budget.
inline double kl_index_grid(double p_hat, std::uint64_t n, std::uint64_t t, double a,
                            double step = 1e-6) {
  const double lt = std::log(static_cast<double>(t));
  const double budget = a == 0.0 ? lt : lt + a * std::log(lt);
  if (budget <= 0.0) return p_hat;
  double best = p_hat;
  for (std::uint64_t k = 1;; ++k) {
    const double q = p_hat + static_cast<double>(k) * step;
    if (q > 1.0) break;
    if (static_cast<double>(n) * kl(p_hat, q) <= budget) {
      best = q;
    } else {
      break;  // d(p_hat, .) is increasing on [p_hat, 1]
    }
  }
  return best;
}

struct Truth {
  std::vector<double> gamma;
  std::vector<std::vector<double>> p;  // full symmetric matrix
};

/// Brute-force enumeration of every row of a PMF table.
inline Truth enumerate(const JointPmf& pmf) {
  const std::size_t n = pmf.outputs;
  Truth t;
  t.gamma.assign(n, 0.0);
  t.p.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t row = 0; row < pmf.probability.size(); ++row) {
    const double w = pmf.probability[row];
    const int y = row & 1;
    for (std::size_t i = 0; i < n; ++i) {
      const int yi = (row >> (i + 1)) & 1;
      if (yi != y) t.gamma[i] += w;
      for (std::size_t j = 0; j < n; ++j) {
        const int yj = (row >> (j + 1)) & 1;
        if (yi != yj) t.p[i][j] += w;
      }
    }
  }
  return t;
}

/// All minimisers of cost + gamma, then the largest of them.
inline std::size_t optimal_by_enumeration(const std::vector<double>& cost,
                                          const std::vector<double>& gamma) {
  std::vector<std::size_t> minimisers;
  for (std::size_t i = 0; i < cost.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < cost.size(); ++j) {
      if (cost[j] + gamma[j] < cost[i] + gamma[i]) is_min = false;
    }
    if (is_min) minimisers.push_back(i);
  }
  return minimisers.back();
}

/// min_{j > opt} (C_j - C_opt - p_{opt j}), written out directly.
inline double margin(const std::vector<double>& cost, const std::vector<std::vector<double>>& p,
                     std::size_t opt) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = opt + 1; j < cost.size(); ++j) {
    m = std::min(m, cost[j] - cost[opt] - p[opt][j]);
  }
  return m;
}

/// Random PMF over {0,1}^(outputs+1): a mixture of a nested-error law and a Dirichlet
/// perturbation, which gives a spread of disagreement levels.
inline JointPmf random_pmf(std::size_t outputs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> rates(outputs);
  for (double& r : rates) r = 0.45 * u(rng);
  const double p0 = 0.2 + 0.6 * u(rng);
  JointPmf pmf = nested_error_pmf(rates, p0);
  const double noise = 0.3 * u(rng);
  std::gamma_distribution<double> g(1.0, 1.0);
  std::vector<double> dir(pmf.probability.size());
  double total = 0.0;
  for (double& d : dir) total += (d = g(rng));
  for (std::size_t i = 0; i < dir.size(); ++i) {
    pmf.probability[i] = (1.0 - noise) * pmf.probability[i] + noise * dir[i] / total;
  }
  double sum = 0.0;
  for (double p : pmf.probability) sum += p;
  for (double& p : pmf.probability) p /= sum;
  return pmf;
}

}  // namespace csmd::oracle

#include "csmd/subsets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "csmd/error.hpp"
#include "csmd/instance.hpp"

namespace csmd {

SubsetIndexing enumerate_subsets(const std::vector<double>& feature_costs,
                                 const std::vector<double>& lambda_by_mask, std::size_t cap) {
  const std::size_t k = feature_costs.size();
  if (k == 0) throw ConfigError("subset enumeration needs at least one feature");
  if (k > cap || k >= 32) {
    throw CapacityError("K = " + std::to_string(k) + " exceeds the subset cap of " +
                        std::to_string(cap) + " (would need " +
                        std::to_string((std::uint64_t{1} << std::min<std::size_t>(k, 63)) - 1) +
                        " = 2^K - 1 arms)");
  }
  const std::size_t arms = (std::size_t{1} << k) - 1;
  if (lambda_by_mask.size() != arms) {
    throw ConfigError("combinatorial lambda must have 2^K - 1 = " + std::to_string(arms) +
                      " entries, got " + std::to_string(lambda_by_mask.size()));
  }

  std::vector<double> raw(arms + 1, 0.0);
  std::vector<double> eff(arms + 1, 0.0);
  for (std::uint32_t m = 1; m <= arms; ++m) {
    double sum = 0.0;
    for (std::size_t f = 0; f < k; ++f) {
      if (m & (1u << f)) sum += feature_costs[f];
    }
    raw[m] = sum;
    eff[m] = lambda_by_mask[m - 1] * sum;
  }

  std::vector<std::uint32_t> order(arms);
  std::iota(order.begin(), order.end(), 1u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (eff[a] != eff[b]) return eff[a] < eff[b];
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a > b;
  });

  SubsetIndexing out;
  out.features = k;
  out.mask = order;
  out.raw_cost.reserve(arms);
  out.effective_cost.reserve(arms);
  out.arm_of_mask.assign(arms, 0);
  for (std::size_t s = 0; s < arms; ++s) {
    out.raw_cost.push_back(raw[order[s]]);
    out.effective_cost.push_back(eff[order[s]]);
    out.arm_of_mask[order[s] - 1] = s;
  }

  out.basic_arms.resize(arms);
  for (std::size_t s = 0; s < arms; ++s) {
    const std::uint32_t m = order[s];
    auto& basics = out.basic_arms[s];
    basics.reserve((std::size_t{1} << std::popcount(m)) - 1);
    // Standard submask walk over nonempty submasks of m.
    for (std::uint32_t sub = m; sub != 0; sub = (sub - 1) & m) {
      basics.push_back(out.arm_of_mask[sub - 1]);
    }
    std::sort(basics.begin(), basics.end());
  }
  return out;
}

SubsetIndexing enumerate_subsets(const Instance& instance, std::size_t cap) {
  if (instance.mode != Mode::combinatorial) {
    throw ConfigError("subset enumeration requires a combinatorial instance");
  }
  return enumerate_subsets(instance.feature_costs, instance.lambda, cap);
}

}  // namespace csmd

#include "csmd/cascade.hpp"

#include <numeric>

namespace csmd {

namespace {

EngineConfig cascade_config(std::string name, Estimator estimator,
                            std::span<const double> costs) {
  EngineConfig cfg;
  cfg.name = std::move(name);
  cfg.estimator = estimator;
  cfg.rule = SetRule::cascade;
  cfg.costs.assign(costs.begin(), costs.end());
  cfg.observable.resize(costs.size());
  for (std::size_t i = 0; i < costs.size(); ++i) {
    cfg.observable[i].resize(i + 1);
    std::iota(cfg.observable[i].begin(), cfg.observable[i].end(), std::size_t{0});
  }
  return cfg;
}

}  // namespace

std::unique_ptr<OptimisticPolicy> make_csmd_ts(std::span<const double> effective_costs) {
  return std::make_unique<OptimisticPolicy>(
      cascade_config("CSMD-TS", Estimator::thompson, effective_costs));
}

std::unique_ptr<OptimisticPolicy> make_csmd_kl(std::span<const double> effective_costs, double a) {
  EngineConfig cfg = cascade_config("CSMD-kl", Estimator::kl_ucb, effective_costs);
  cfg.forced_first_pull = true;
  cfg.a = a;
  return std::make_unique<OptimisticPolicy>(std::move(cfg));
}

std::unique_ptr<OptimisticPolicy> make_csmd_ucb(std::span<const double> effective_costs,
                                                double alpha) {
  EngineConfig cfg = cascade_config("CSMD-UCB", Estimator::ucb1, effective_costs);
  cfg.forced_first_pull = true;
  cfg.alpha = alpha;
  return std::make_unique<OptimisticPolicy>(std::move(cfg));
}

}  // namespace csmd

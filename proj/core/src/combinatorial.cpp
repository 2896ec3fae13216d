#include "csmd/combinatorial.hpp"

#include "csmd/error.hpp"

namespace csmd {

namespace {

EngineConfig subset_config(std::string name, Estimator estimator, const SubsetIndexing& idx) {
  EngineConfig cfg;
  cfg.name = std::move(name);
  cfg.estimator = estimator;
  cfg.rule = SetRule::subset;
  cfg.costs = idx.effective_cost;
  cfg.observable = idx.basic_arms;
  return cfg;
}

}  // namespace

SelectionSets compute_subset_sets(const SubsetIndexing& indexing,
                                  const PairMatrix<double>& optimistic) {
  return compute_subset_sets(std::span<const double>(indexing.effective_cost), optimistic);
}

std::unique_ptr<OptimisticPolicy> make_csmd_cts(const SubsetIndexing& indexing) {
  return std::make_unique<OptimisticPolicy>(
      subset_config("CSMD-CTS", Estimator::thompson, indexing));
}

std::unique_ptr<OptimisticPolicy> make_csmd_escb(const SubsetIndexing& indexing,
                                                 Estimator index, double param) {
  if (index == Estimator::thompson) {
    throw ConfigError("CSMD-ESCB takes a kl-UCB or UCB1 index");
  }
  const bool kl = index == Estimator::kl_ucb;
  EngineConfig cfg = subset_config(kl ? "CSMD-ESCB-kl" : "CSMD-ESCB-UCB1", index, indexing);
  cfg.forced_first_pull = true;
  if (kl) {
    cfg.a = param;
  } else {
    cfg.alpha = param;
  }
  return std::make_unique<OptimisticPolicy>(std::move(cfg));
}

}  // namespace csmd

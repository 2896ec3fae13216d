#include "csmd/policy.hpp"

#include <algorithm>
#include <sstream>

#include "csmd/cascade.hpp"
#include "csmd/combinatorial.hpp"
#include "csmd/error.hpp"
#include "csmd/indices.hpp"

namespace csmd {

OptimisticPolicy::OptimisticPolicy(EngineConfig config)
    : config_(std::move(config)),
      stats_(config_.costs.size()),
      scratch_(config_.costs.size(), 0.0) {
  if (config_.costs.empty()) throw ConfigError(config_.name + ": no arms");
  if (config_.observable.size() != config_.costs.size()) {
    throw ConfigError(config_.name + ": observation lists do not match the arm count");
  }
  if (config_.estimator == Estimator::ucb1 && !(config_.alpha > 0.5)) {
    throw ConfigError(config_.name + ": alpha must be > 0.5");
  }
  if (config_.estimator == Estimator::kl_ucb && !(config_.a >= 0.0)) {
    throw ConfigError(config_.name + ": a must be >= 0");
  }
}

std::string OptimisticPolicy::params() const {
  std::ostringstream os;
  switch (config_.estimator) {
    case Estimator::thompson: os << "prior=Beta(1,1)"; break;
    case Estimator::kl_ucb: os << "a=" << config_.a; break;
    case Estimator::ucb1: os << "alpha=" << config_.alpha; break;
  }
  return os.str();
}

void OptimisticPolicy::estimate(std::uint64_t round, Engine& engine,
                                PairMatrix<double>& out) const {
  const std::size_t n = arm_count();
  if (out.size() != n) out = PairMatrix<double>(n, 0.0);
  // Pairs are visited in (i, j), i < j, row-major order so that Thompson draws
  // consume the engine in a fixed sequence.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairCounts& c = stats_(i, j);
      double value = 1.0;
      switch (config_.estimator) {
        case Estimator::thompson:
          value = ts_sample(c.successes, c.failures, engine);
          break;
        case Estimator::kl_ucb:
          if (c.comparisons > 0) {
            value = kl_ucb_index(stats_.empirical(i, j), c.comparisons, round, config_.a);
          }
          break;
        case Estimator::ucb1:
          if (c.comparisons > 0) {
            value = ucb1_index(stats_.empirical(i, j), c.comparisons, round, config_.alpha);
          }
          break;
      }
      out(i, j) = value;
    }
  }
}

SelectionSets OptimisticPolicy::choose(const PairMatrix<double>& optimistic) const {
  return config_.rule == SetRule::cascade ? compute_sets(config_.costs, optimistic)
                                          : compute_subset_sets(config_.costs, optimistic);
}

Pull OptimisticPolicy::select(std::uint64_t round, Engine& engine) {
  if (config_.forced_first_pull && round <= 1) {
    last_sets_ = SelectionSets{};
    last_sets_.chosen = arm_count() - 1;
    return Pull{arm_count() - 1, true};
  }
  estimate(round, engine, scratch_);
  last_sets_ = choose(scratch_);
  return Pull{last_sets_.chosen, false};
}

void OptimisticPolicy::observe(std::uint64_t, const Pull& pull,
                               std::span<const std::int8_t> feedback) {
  const std::size_t n = arm_count();
  if (pull.arm >= n) throw ProtocolError(config_.name + ": pulled arm out of range");
  if (feedback.size() < n) {
    throw ProtocolError(config_.name + ": feedback has " + std::to_string(feedback.size()) +
                        " entries, expected " + std::to_string(n));
  }
  auto update = [&](std::span<const std::size_t> arms) {
    for (std::size_t a : arms) {
      if (feedback[a] == kHidden) {
        throw ProtocolError(config_.name + ": feedback is missing arm " + std::to_string(a + 1));
      }
    }
    for (std::size_t x = 0; x < arms.size(); ++x) {
      for (std::size_t y = x + 1; y < arms.size(); ++y) {
        stats_.record(arms[x], arms[y], feedback[arms[x]] != feedback[arms[y]]);
      }
    }
  };
  if (pull.observe_all) {
    std::vector<std::size_t> all(n);
    for (std::size_t a = 0; a < n; ++a) all[a] = a;
    update(all);
  } else {
    update(config_.observable[pull.arm]);
  }
}

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::ts: return "ts";
    case Algorithm::kl: return "kl";
    case Algorithm::ucb1: return "ucb1";
    case Algorithm::cts: return "cts";
    case Algorithm::escb_kl: return "escb-kl";
    case Algorithm::escb_ucb1: return "escb-ucb1";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept {
  for (Algorithm a : {Algorithm::ts, Algorithm::kl, Algorithm::ucb1, Algorithm::cts,
                      Algorithm::escb_kl, Algorithm::escb_ucb1}) {
    if (to_string(a) == text) return a;
  }
  return std::nullopt;
}

Mode algorithm_mode(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::ts:
    case Algorithm::kl:
    case Algorithm::ucb1: return Mode::cascade;
    default: return Mode::combinatorial;
  }
}

std::unique_ptr<Policy> make_policy(Algorithm algo, const Instance& instance,
                                    const PolicyParams& params) {
  if (algorithm_mode(algo) != instance.mode) {
    throw ConfigError("algorithm '" + std::string(to_string(algo)) + "' needs a " +
                      to_string(algorithm_mode(algo)) + " instance, got " +
                      to_string(instance.mode));
  }
  switch (algo) {
    case Algorithm::ts: return make_csmd_ts(effective_costs(instance).effective);
    case Algorithm::kl: return make_csmd_kl(effective_costs(instance).effective, params.a);
    case Algorithm::ucb1: return make_csmd_ucb(effective_costs(instance).effective, params.alpha);
    default: break;
  }
  const SubsetIndexing idx = enumerate_subsets(instance, params.subset_cap);
  switch (algo) {
    case Algorithm::cts: return make_csmd_cts(idx);
    case Algorithm::escb_kl: return make_csmd_escb(idx, Estimator::kl_ucb, params.a);
    default: return make_csmd_escb(idx, Estimator::ucb1, params.alpha);
  }
}

}  // namespace csmd

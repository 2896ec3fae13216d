#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csmd/instance.hpp"
#include "csmd/pair_stats.hpp"
#include "csmd/random.hpp"
#include "csmd/selection.hpp"
#include "csmd/subsets.hpp"

namespace csmd {

/// Marks an arm output the learner did not observe this round.
inline constexpr std::int8_t kHidden = -1;

struct Pull {
  std::size_t arm = 0;
  /// Reveal every arm's output this round (forced initial pulls).
  bool observe_all = false;
};

/// Online learner. Rounds are 1-based. Feedback is arm-indexed and has one entry per
/// arm; entries the learner is not entitled to see are kHidden.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string name() const = 0;
  virtual std::string params() const = 0;
  virtual std::size_t arm_count() const = 0;

  virtual Pull select(std::uint64_t round, Engine& engine) = 0;
  virtual void observe(std::uint64_t round, const Pull& pull,
                       std::span<const std::int8_t> feedback) = 0;
};

enum class Estimator { thompson, kl_ucb, ucb1 };
enum class SetRule { cascade, subset };

struct EngineConfig {
  std::string name;
  Estimator estimator = Estimator::thompson;
  SetRule rule = SetRule::cascade;
  std::vector<double> costs;
  std::vector<std::vector<std::size_t>> observable;
  /// Play the last arm with full observation in round 1.
  bool forced_first_pull = false;
  double a = 0.0;
  double alpha = 0.51;
};

/// Shared engine behind every CSMD policy: per-pair optimistic estimates of the
/// disagreement probability feed the selection sets, and the chosen arm's observable
/// arms update the pair statistics.
class OptimisticPolicy final : public Policy {
 public:
  explicit OptimisticPolicy(EngineConfig config);

  std::string name() const override { return config_.name; }
  std::string params() const override;
  std::size_t arm_count() const override { return config_.costs.size(); }

  Pull select(std::uint64_t round, Engine& engine) override;
  void observe(std::uint64_t round, const Pull& pull,
               std::span<const std::int8_t> feedback) override;

  /// Round-`round` optimistic estimate for every pair.
  void estimate(std::uint64_t round, Engine& engine, PairMatrix<double>& out) const;

  /// Selection sets for the given estimates under this policy's rule.
  SelectionSets choose(const PairMatrix<double>& optimistic) const;

  const EngineConfig& config() const noexcept { return config_; }
  const PairStats& stats() const noexcept { return stats_; }
  PairStats& stats() noexcept { return stats_; }
  const SelectionSets& last_sets() const noexcept { return last_sets_; }

 private:
  EngineConfig config_;
  PairStats stats_;
  PairMatrix<double> scratch_;
  SelectionSets last_sets_;
};

/// Always plays one arm; observes nothing. Used for regret accounting checks.
class FixedArmPolicy final : public Policy {
 public:
  FixedArmPolicy(std::size_t arms, std::size_t arm) : arms_(arms), arm_(arm) {}

  std::string name() const override { return "fixed"; }
  std::string params() const override { return "arm=" + std::to_string(arm_ + 1); }
  std::size_t arm_count() const override { return arms_; }
  Pull select(std::uint64_t, Engine&) override { return Pull{arm_, false}; }
  void observe(std::uint64_t, const Pull&, std::span<const std::int8_t>) override {}

 private:
  std::size_t arms_;
  std::size_t arm_;
};

enum class Algorithm { ts, kl, ucb1, cts, escb_kl, escb_ucb1 };

std::string_view to_string(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept;
Mode algorithm_mode(Algorithm algo) noexcept;

struct PolicyParams {
  double a = 0.0;
  double alpha = 0.51;
  std::size_t subset_cap = kDefaultSubsetCap;
};

/// Builds a fresh policy for the instance. Throws ConfigError on a mode mismatch.
std::unique_ptr<Policy> make_policy(Algorithm algo, const Instance& instance,
                                    const PolicyParams& params = {});

}  // namespace csmd

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "csmd/analysis.hpp"
#include "csmd/instance.hpp"
#include "csmd/policy.hpp"

namespace csmd {

/// Pseudo-regret of one repetition.
struct RegretTrace {
  std::vector<double> instant;
  std::vector<double> cumulative;
  /// Arm played each round (0-based).
  std::vector<std::uint32_t> chosen;
  std::size_t rep_id = 0;
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  std::uint64_t horizon = 10000;
  std::size_t reps = 100;
  std::uint64_t master_seed = 0;
  std::string instance_id = "instance";
  std::string algorithm_id = "policy";
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

using PolicyFactory = std::function<std::unique_ptr<Policy>()>;

/// Runs `reps` independent repetitions of `horizon` rounds. Each repetition gets a
/// fresh policy, a fresh sampler, and its own seed from derive_seed(). Results are
/// ordered by rep_id regardless of scheduling.
std::vector<RegretTrace> run_experiment(const Instance& instance, const PolicyFactory& factory,
                                        const ExperimentConfig& config);

/// Same, with a precomputed layout and analysis.
std::vector<RegretTrace> run_experiment(const Instance& instance, const ArmLayout& layout,
                                        const InstanceAnalysis& analysis,
                                        const PolicyFactory& factory,
                                        const ExperimentConfig& config);

/// Per-round mean cumulative regret with a normal-approximation 95% band.
struct RegretBand {
  std::vector<double> mean;
  std::vector<double> ci_low;
  std::vector<double> ci_high;
  std::size_t reps = 0;
  /// False when reps < 2; ci_low/ci_high are then empty.
  bool has_ci = false;
};

inline constexpr double kCiMultiplier = 1.96;

RegretBand aggregate(std::span<const RegretTrace> traces);

/// Columns: round,algo,mean_cum_regret,ci_low,ci_high. Rounds are 1-based.
void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const std::string& algo, const RegretBand& band);
void write_csv(std::ostream& os, const std::string& algo, const RegretBand& band);

/// JSON array of row objects with the same keys as the CSV columns.
void write_json(std::ostream& os, const std::string& algo, const RegretBand& band);

/// Shortest round-trip decimal representation; identical on every platform.
std::string format_number(double value);

}  // namespace csmd

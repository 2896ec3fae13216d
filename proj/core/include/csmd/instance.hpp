#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace csmd {

enum class Mode { cascade, combinatorial };

const char* to_string(Mode mode) noexcept;

/// Explicit probability table over {0,1}^(outputs+1).
/// Row index bit 0 is the hidden label Y, bit c+1 is output coordinate c.
struct JointPmf {
  std::size_t outputs = 0;
  std::vector<double> probability;
};

/// Y ~ Bernoulli(base_rate); output c equals Y flipped independently with error_rates[c].
struct IndependentError {
  double base_rate = 0.5;
  std::vector<double> error_rates;
};

/// Recorded rounds replayed in order (or resampled uniformly with replacement).
struct Trace {
  std::size_t outputs = 0;
  /// Row-major, stride outputs+1; column 0 is Y.
  std::vector<std::uint8_t> cells;
  bool resample = false;
  std::string source;

  std::size_t rows() const noexcept { return outputs + 1 == 0 ? 0 : cells.size() / (outputs + 1); }
  const std::uint8_t* row(std::size_t r) const noexcept { return cells.data() + r * (outputs + 1); }
};

using EnvironmentModel = std::variant<JointPmf, IndependentError, Trace>;

/// Number of output coordinates the environment generates (excluding Y).
std::size_t output_count(const EnvironmentModel& env) noexcept;

/// A problem instance: feature costs, normalizers, and the outcome distribution.
///
/// Cascade mode has K arms; arm i uses features 1..i. Combinatorial mode has 2^K - 1 arms,
/// one per nonempty feature subset. In combinatorial mode `lambda` and the environment's
/// output coordinates are indexed by subset bitmask: entry m-1 belongs to bitmask m.
struct Instance {
  std::string name;
  Mode mode = Mode::cascade;
  std::size_t features = 0;
  /// Per-feature cost increments c_1..c_K.
  std::vector<double> feature_costs;
  std::vector<double> lambda;
  EnvironmentModel env;
};

/// Arms in the instance: K (cascade) or 2^K - 1 (combinatorial).
std::size_t arm_count(const Instance& instance);

/// Throws ConfigError describing the first violated invariant.
void validate(const Instance& instance);

/// Cumulative sums c_1, c_1+c_2, ...
std::vector<double> cumulative_costs(const std::vector<double>& increments);

/// Inverse of cumulative_costs; throws ConfigError when the input decreases.
std::vector<double> cost_increments(const std::vector<double>& cumulative);

/// Arm-ordered costs. `effective` is lambda-weighted and is the unit in which
/// costs are compared against error rates and disagreement probabilities.
struct EffectiveCosts {
  std::vector<double> raw;
  std::vector<double> effective;
};

/// Cascade: effective[i] = lambda_i * (c_1 + ... + c_i).
/// Combinatorial: arms in subset-indexing order, effective[s] = lambda_s * sum of c_k in F_s.
EffectiveCosts effective_costs(const Instance& instance);

}  // namespace csmd

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "csmd/instance.hpp"
#include "csmd/pair_matrix.hpp"
#include "csmd/random.hpp"

namespace csmd {

/// One round drawn from the environment: hidden label and every output coordinate.
struct Outcome {
  std::uint8_t label = 0;
  std::vector<std::uint8_t> outputs;
};

/// Draws rounds from an EnvironmentModel. Owns the trace replay cursor, so each
/// repetition should construct its own Sampler.
class Sampler {
 public:
  explicit Sampler(const EnvironmentModel& env);

  void next(Engine& engine, Outcome& out);
  Outcome next(Engine& engine);

  std::size_t cursor() const noexcept { return cursor_; }
  std::size_t outputs() const noexcept { return outputs_; }

 private:
  const EnvironmentModel* env_;
  std::size_t outputs_;
  std::vector<double> cdf_;
  std::size_t cursor_ = 0;
};

Outcome sample_round(const EnvironmentModel& env, Engine& engine);

struct ErrorRates {
  std::vector<double> gamma;
  /// True when computed from trace frequencies rather than the generating law.
  bool estimated = false;
};

/// gamma_c = P(output c != Y), per output coordinate.
ErrorRates exact_error_rates(const EnvironmentModel& env);

/// p(c, d) = P(output c != output d), per pair of output coordinates.
PairMatrix<double> exact_disagreement(const EnvironmentModel& env);

/// Largest index among the minimisers of cost + gamma.
std::size_t optimal_arm(std::span<const double> effective_costs, std::span<const double> gamma);

/// min over j > optimal of (C_j - C_opt - p(opt, j)); +infinity when optimal is the last arm.
/// The instance satisfies weak dominance iff the result is > 0.
double wd_margin(std::span<const double> effective_costs, const PairMatrix<double>& disagreement,
                 std::size_t optimal);

/// Strong dominance along coordinate order: whenever output i is correct, every
/// later output is correct too (on all positive-probability rows).
bool sd_holds(const EnvironmentModel& env);

}  // namespace csmd

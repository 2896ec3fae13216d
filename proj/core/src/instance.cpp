#include "csmd/instance.hpp"

#include <cmath>
#include <string>

#include "csmd/error.hpp"
#include "csmd/subsets.hpp"

namespace csmd {

namespace {

// Hard ceiling on K for combinatorial mode; the configurable cap in enumerate_subsets is lower.
constexpr std::size_t kMaxCombinatorialFeatures = 20;
constexpr std::size_t kMaxPmfOutputs = 24;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool in_unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

void validate_env(const EnvironmentModel& env, std::size_t expected_outputs) {
  const std::size_t outputs = output_count(env);
  if (outputs != expected_outputs) {
    throw ConfigError("environment generates " + std::to_string(outputs) +
                      " arm outputs but the instance needs " + std::to_string(expected_outputs));
  }
  std::visit(
      Overloaded{
          [&](const JointPmf& pmf) {
            if (pmf.outputs > kMaxPmfOutputs) {
              throw ConfigError("joint PMF over " + std::to_string(pmf.outputs + 1) +
                                " binary variables is too large");
            }
            if (pmf.probability.size() != (std::size_t{1} << (pmf.outputs + 1))) {
              throw ConfigError("joint PMF table must have 2^(outputs+1) entries");
            }
            double total = 0.0;
            for (double p : pmf.probability) {
              if (!std::isfinite(p) || p < 0.0) {
                throw ConfigError("joint PMF has a negative or non-finite entry");
              }
              total += p;
            }
            if (std::abs(total - 1.0) > 1e-12) {
              throw ConfigError("joint PMF sums to " + std::to_string(total) + " (deficit " +
                                std::to_string(1.0 - total) + "), expected 1 within 1e-12");
            }
          },
          [&](const IndependentError& ie) {
            if (!in_unit_interval(ie.base_rate)) {
              throw ConfigError("independent-error base rate p0 must lie in [0, 1]");
            }
            for (std::size_t c = 0; c < ie.error_rates.size(); ++c) {
              if (!in_unit_interval(ie.error_rates[c])) {
                throw ConfigError("error rate " + std::to_string(c + 1) + " must lie in [0, 1]");
              }
            }
          },
          [&](const Trace& trace) {
            if (trace.rows() == 0) throw ConfigError("trace has no rows");
            for (std::uint8_t v : trace.cells) {
              if (v > 1) throw ConfigError("trace contains a non-binary value");
            }
          },
      },
      env);
}

}  // namespace

const char* to_string(Mode mode) noexcept {
  return mode == Mode::cascade ? "cascade" : "combinatorial";
}

std::size_t output_count(const EnvironmentModel& env) noexcept {
  return std::visit(Overloaded{
                        [](const JointPmf& p) { return p.outputs; },
                        [](const IndependentError& ie) { return ie.error_rates.size(); },
                        [](const Trace& t) { return t.outputs; },
                    },
                    env);
}

std::size_t arm_count(const Instance& instance) {
  if (instance.mode == Mode::cascade) return instance.features;
  if (instance.features > kMaxCombinatorialFeatures) {
    throw CapacityError("combinatorial K = " + std::to_string(instance.features) +
                        " is beyond the supported maximum of " +
                        std::to_string(kMaxCombinatorialFeatures));
  }
  return (std::size_t{1} << instance.features) - 1;
}

void validate(const Instance& instance) {
  if (instance.features < 1) throw ConfigError("K must be at least 1");
  if (instance.feature_costs.size() != instance.features) {
    throw ConfigError("expected " + std::to_string(instance.features) + " feature costs, got " +
                      std::to_string(instance.feature_costs.size()));
  }
  for (std::size_t k = 0; k < instance.feature_costs.size(); ++k) {
    const double c = instance.feature_costs[k];
    if (!std::isfinite(c) || c < 0.0) {
      throw ConfigError("feature cost " + std::to_string(k + 1) + " must be finite and >= 0");
    }
  }
  const std::size_t arms = arm_count(instance);
  if (instance.lambda.size() != arms) {
    throw ConfigError(std::string(to_string(instance.mode)) + " mode needs " +
                      std::to_string(arms) + " lambda entries, got " +
                      std::to_string(instance.lambda.size()));
  }
  for (std::size_t i = 0; i < instance.lambda.size(); ++i) {
    const double l = instance.lambda[i];
    if (!std::isfinite(l) || l <= 0.0) {
      throw ConfigError("lambda entry " + std::to_string(i + 1) + " must be finite and > 0");
    }
  }
  validate_env(instance.env, arms);
}

std::vector<double> cumulative_costs(const std::vector<double>& increments) {
  std::vector<double> out;
  out.reserve(increments.size());
  double running = 0.0;
  for (double c : increments) {
    running += c;
    out.push_back(running);
  }
  return out;
}

std::vector<double> cost_increments(const std::vector<double>& cumulative) {
  std::vector<double> out;
  out.reserve(cumulative.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    if (cumulative[i] < prev) {
      throw ConfigError("cumulative costs must be non-decreasing (entry " + std::to_string(i + 1) +
                        ")");
    }
    out.push_back(cumulative[i] - prev);
    prev = cumulative[i];
  }
  return out;
}

EffectiveCosts effective_costs(const Instance& instance) {
  if (instance.mode == Mode::cascade) {
    if (instance.lambda.size() != instance.features ||
        instance.feature_costs.size() != instance.features) {
      throw ConfigError("cascade mode needs K feature costs and K lambda entries");
    }
    EffectiveCosts out;
    out.raw = cumulative_costs(instance.feature_costs);
    out.effective.reserve(out.raw.size());
    for (std::size_t i = 0; i < out.raw.size(); ++i) {
      out.effective.push_back(instance.lambda[i] * out.raw[i]);
    }
    return out;
  }
  const SubsetIndexing idx = enumerate_subsets(instance, kMaxCombinatorialFeatures);
  return EffectiveCosts{idx.raw_cost, idx.effective_cost};
}

}  // namespace csmd

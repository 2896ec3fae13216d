#include "csmd/environment.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "csmd/error.hpp"

namespace csmd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Calls fn(probability, row_accessor) for every positive-mass row of a PMF or trace.
// Trace rows carry weight 1/rows.
template <class Fn>
void for_each_row(const EnvironmentModel& env, Fn&& fn) {
  if (const auto* pmf = std::get_if<JointPmf>(&env)) {
    const std::size_t n = pmf->outputs;
    std::vector<std::uint8_t> row(n + 1);
    for (std::size_t idx = 0; idx < pmf->probability.size(); ++idx) {
      const double p = pmf->probability[idx];
      if (p <= 0.0) continue;
      for (std::size_t b = 0; b <= n; ++b) row[b] = (idx >> b) & 1u;
      fn(p, row.data());
    }
  } else if (const auto* trace = std::get_if<Trace>(&env)) {
    const double w = 1.0 / static_cast<double>(trace->rows());
    for (std::size_t r = 0; r < trace->rows(); ++r) fn(w, trace->row(r));
  }
}

}  // namespace

Sampler::Sampler(const EnvironmentModel& env) : env_(&env), outputs_(output_count(env)) {
  if (const auto* pmf = std::get_if<JointPmf>(&env)) {
    cdf_.resize(pmf->probability.size());
    double running = 0.0;
    for (std::size_t i = 0; i < cdf_.size(); ++i) {
      running += pmf->probability[i];
      cdf_[i] = running;
    }
  }
}

void Sampler::next(Engine& engine, Outcome& out) {
  out.outputs.resize(outputs_);
  std::visit(
      Overloaded{
          [&](const JointPmf& pmf) {
            const double u = uniform01(engine) * cdf_.back();
            auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
            std::size_t idx = static_cast<std::size_t>(it - cdf_.begin());
            if (idx >= cdf_.size()) {
              idx = cdf_.size() - 1;
              while (idx > 0 && pmf.probability[idx] <= 0.0) --idx;
            }
            out.label = idx & 1u;
            for (std::size_t c = 0; c < outputs_; ++c) out.outputs[c] = (idx >> (c + 1)) & 1u;
          },
          [&](const IndependentError& ie) {
            out.label = bernoulli(engine, ie.base_rate) ? 1 : 0;
            for (std::size_t c = 0; c < outputs_; ++c) {
              out.outputs[c] = out.label ^ (bernoulli(engine, ie.error_rates[c]) ? 1 : 0);
            }
          },
          [&](const Trace& trace) {
            std::size_t r;
            if (trace.resample) {
              r = static_cast<std::size_t>(uniform01(engine) * static_cast<double>(trace.rows()));
              if (r >= trace.rows()) r = trace.rows() - 1;
            } else {
              if (cursor_ >= trace.rows()) throw TraceExhausted(trace.rows());
              r = cursor_++;
            }
            const std::uint8_t* row = trace.row(r);
            out.label = row[0];
            std::copy(row + 1, row + 1 + outputs_, out.outputs.begin());
          },
      },
      *env_);
}

Outcome Sampler::next(Engine& engine) {
  Outcome out;
  next(engine, out);
  return out;
}

Outcome sample_round(const EnvironmentModel& env, Engine& engine) {
  Sampler sampler(env);
  return sampler.next(engine);
}

ErrorRates exact_error_rates(const EnvironmentModel& env) {
  ErrorRates out;
  const std::size_t n = output_count(env);
  if (const auto* ie = std::get_if<IndependentError>(&env)) {
    out.gamma = ie->error_rates;
    return out;
  }
  out.estimated = std::holds_alternative<Trace>(env);
  out.gamma.assign(n, 0.0);
  for_each_row(env, [&](double p, const std::uint8_t* row) {
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c + 1] != row[0]) out.gamma[c] += p;
    }
  });
  return out;
}

PairMatrix<double> exact_disagreement(const EnvironmentModel& env) {
  const std::size_t n = output_count(env);
  PairMatrix<double> out(n, 0.0);
  if (const auto* ie = std::get_if<IndependentError>(&env)) {
    const auto& g = ie->error_rates;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out(i, j) = g[i] * (1.0 - g[j]) + g[j] * (1.0 - g[i]);
      }
    }
    return out;
  }
  for_each_row(env, [&](double p, const std::uint8_t* row) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (row[i + 1] != row[j + 1]) out(i, j) += p;
      }
    }
  });
  return out;
}

std::size_t optimal_arm(std::span<const double> effective_costs, std::span<const double> gamma) {
  if (effective_costs.size() != gamma.size() || gamma.empty()) {
    throw ConfigError("optimal_arm: cost and error-rate vectors must be nonempty and equal length");
  }
  std::size_t best = 0;
  double best_total = effective_costs[0] + gamma[0];
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    const double total = effective_costs[i] + gamma[i];
    if (total <= best_total) {
      best = i;
      best_total = total;
    }
  }
  return best;
}

double wd_margin(std::span<const double> effective_costs, const PairMatrix<double>& disagreement,
                 std::size_t optimal) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = optimal + 1; j < effective_costs.size(); ++j) {
    margin = std::min(margin, effective_costs[j] - effective_costs[optimal] -
                                  disagreement.at(optimal, j));
  }
  return margin;
}

bool sd_holds(const EnvironmentModel& env) {
  const std::size_t n = output_count(env);
  if (const auto* ie = std::get_if<IndependentError>(&env)) {
    // A violating row (i correct, j > i wrong) has probability (1 - r_i) * r_j.
    const auto& r = ie->error_rates;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (r[i] < 1.0 && r[j] > 0.0) return false;
      }
    }
    return true;
  }
  bool holds = true;
  for_each_row(env, [&](double, const std::uint8_t* row) {
    bool seen_correct = false;
    for (std::size_t c = 0; c < n && holds; ++c) {
      const bool correct = row[c + 1] == row[0];
      if (seen_correct && !correct) holds = false;
      seen_correct = seen_correct || correct;
    }
  });
  return holds;
}

}  // namespace csmd

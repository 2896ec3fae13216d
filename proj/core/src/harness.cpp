#include "csmd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <json.hpp>
#include <ostream>
#include <thread>

#include "csmd/environment.hpp"
#include "csmd/error.hpp"

namespace csmd {

namespace {

RegretTrace run_repetition(const Instance& instance, const ArmLayout& layout,
                           const InstanceAnalysis& analysis, const PolicyFactory& factory,
                           const ExperimentConfig& config, std::size_t rep) {
  RegretTrace trace;
  trace.rep_id = rep;
  trace.seed = derive_seed(config.master_seed, config.instance_id, config.algorithm_id, rep);

  Engine env_engine(trace.seed);
  Engine policy_engine(splitmix64(trace.seed));
  Sampler sampler(instance.env);
  std::unique_ptr<Policy> policy = factory();
  const std::size_t arms = layout.arm_count();
  if (!policy || policy->arm_count() != arms) {
    throw ConfigError("policy arm count does not match the instance");
  }

  const double best = analysis.total[analysis.optimal_arm];
  trace.instant.resize(config.horizon);
  trace.cumulative.resize(config.horizon);
  trace.chosen.resize(config.horizon);

  Outcome outcome;
  std::vector<std::int8_t> feedback(arms, kHidden);
  double running = 0.0;
  for (std::uint64_t t = 1; t <= config.horizon; ++t) {
    sampler.next(env_engine, outcome);
    const Pull pull = policy->select(t, policy_engine);
    if (pull.arm >= arms) throw ProtocolError(policy->name() + " selected an invalid arm");

    std::fill(feedback.begin(), feedback.end(), kHidden);
    if (pull.observe_all) {
      for (std::size_t a = 0; a < arms; ++a) {
        feedback[a] = static_cast<std::int8_t>(outcome.outputs[layout.coordinate[a]]);
      }
    } else {
      for (std::size_t a : layout.observable[pull.arm]) {
        feedback[a] = static_cast<std::int8_t>(outcome.outputs[layout.coordinate[a]]);
      }
    }
    policy->observe(t, pull, feedback);

    const double regret = analysis.total[pull.arm] - best;
    running += regret;
    trace.instant[t - 1] = regret;
    trace.cumulative[t - 1] = running;
    trace.chosen[t - 1] = static_cast<std::uint32_t>(pull.arm);
  }
  return trace;
}

}  // namespace

std::vector<RegretTrace> run_experiment(const Instance& instance, const PolicyFactory& factory,
                                        const ExperimentConfig& config) {
  validate(instance);
  const ArmLayout layout = make_layout(instance);
  const InstanceAnalysis analysis = analyze(instance, layout);
  return run_experiment(instance, layout, analysis, factory, config);
}

std::vector<RegretTrace> run_experiment(const Instance& instance, const ArmLayout& layout,
                                        const InstanceAnalysis& analysis,
                                        const PolicyFactory& factory,
                                        const ExperimentConfig& config) {
  if (config.reps == 0) throw ConfigError("at least one repetition is required");
  if (config.horizon == 0) throw ConfigError("horizon must be positive");

  std::vector<RegretTrace> traces(config.reps);
  std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, config.reps);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t rep = next++; rep < config.reps; rep = next++) {
      try {
        traces[rep] = run_repetition(instance, layout, analysis, factory, config, rep);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.reps;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return traces;
}

RegretBand aggregate(std::span<const RegretTrace> traces) {
  RegretBand band;
  band.reps = traces.size();
  if (traces.empty()) return band;
  const std::size_t horizon = traces.front().cumulative.size();
  for (const RegretTrace& t : traces) {
    if (t.cumulative.size() != horizon) {
      throw ConfigError("cannot aggregate traces with different horizons");
    }
  }
  const double r = static_cast<double>(traces.size());
  band.has_ci = traces.size() >= 2;
  band.mean.assign(horizon, 0.0);
  if (band.has_ci) {
    band.ci_low.assign(horizon, 0.0);
    band.ci_high.assign(horizon, 0.0);
  }
  for (std::size_t k = 0; k < horizon; ++k) {
    double sum = 0.0;
    for (const RegretTrace& t : traces) sum += t.cumulative[k];
    const double mean = sum / r;
    band.mean[k] = mean;
    if (!band.has_ci) continue;
    double ss = 0.0;
    for (const RegretTrace& t : traces) {
      const double d = t.cumulative[k] - mean;
      ss += d * d;
    }
    const double half = kCiMultiplier * std::sqrt(ss / (r - 1.0)) / std::sqrt(r);
    band.ci_low[k] = mean - half;
    band.ci_high[k] = mean + half;
  }
  return band;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_csv_header(std::ostream& os) { os << "round,algo,mean_cum_regret,ci_low,ci_high\n"; }

void write_csv_rows(std::ostream& os, const std::string& algo, const RegretBand& band) {
  for (std::size_t k = 0; k < band.mean.size(); ++k) {
    os << (k + 1) << ',' << algo << ',' << format_number(band.mean[k]) << ',';
    if (band.has_ci) {
      os << format_number(band.ci_low[k]) << ',' << format_number(band.ci_high[k]);
    } else {
      os << ',';
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const std::string& algo, const RegretBand& band) {
  write_csv_header(os);
  write_csv_rows(os, algo, band);
}

void write_json(std::ostream& os, const std::string& algo, const RegretBand& band) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < band.mean.size(); ++k) {
    nlohmann::ordered_json row;
    row["round"] = k + 1;
    row["algo"] = algo;
    row["mean_cum_regret"] = band.mean[k];
    if (band.has_ci) {
      row["ci_low"] = band.ci_low[k];
      row["ci_high"] = band.ci_high[k];
    } else {
      row["ci_low"] = nullptr;
      row["ci_high"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  os << rows.dump() << '\n';
}

}  // namespace csmd

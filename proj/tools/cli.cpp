#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "csmd/analysis.hpp"
#include "csmd/error.hpp"
#include "csmd/harness.hpp"
#include "csmd/instance_io.hpp"
#include "csmd/layout.hpp"
#include "csmd/policy.hpp"
#include "csmd/presets.hpp"

namespace csmd::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kOutDirEnv = "CSMD_OUT_DIR";

std::string arm_label(const InstanceAnalysis& a, std::size_t arm) {
  std::string label = "{";
  if (a.mode == Mode::cascade) {
    label += arm == 0 ? "1" : "1.." + std::to_string(arm + 1);
  } else {
    bool first = true;
    for (std::size_t f = 0; f < 32; ++f) {
      if (a.mask[arm] & (1u << f)) {
        if (!first) label += ",";
        label += std::to_string(f + 1);
        first = false;
      }
    }
  }
  return label + "}";
}

std::string margin_text(double xi) {
  if (std::isinf(xi)) return xi > 0 ? "+inf" : "-inf";
  return format_number(xi);
}

void print_analysis(std::ostream& out, const Instance& inst, const InstanceAnalysis& a) {
  const std::size_t n = a.gamma.size();
  out << "instance: " << inst.name << '\n';
  out << "mode: " << to_string(a.mode) << "  K: " << inst.features << "  arms: " << n << '\n';
  if (a.estimated) out << "note: error rates and disagreements are trace frequencies\n";
  out << std::left << std::setw(6) << "arm" << std::setw(14) << "features" << std::setw(12)
      << "raw_cost" << std::setw(14) << "eff_cost" << std::setw(12) << "gamma"
      << "total\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << std::left << std::setw(6) << (i + 1) << std::setw(14) << arm_label(a, i)
        << std::setw(12) << format_number(a.raw_cost[i]) << std::setw(14)
        << format_number(a.effective_cost[i]) << std::setw(12) << format_number(a.gamma[i])
        << format_number(a.total[i]) << '\n';
  }
  out << "disagreement P(Y^i != Y^j):\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  ";
    for (std::size_t j = 0; j < n; ++j) {
      out << std::left << std::setw(22) << format_number(a.disagreement.at(i, j)) << ' ';
    }
    out << '\n';
  }
  out << "optimal arm: " << (a.optimal_arm + 1) << ' ' << arm_label(a, a.optimal_arm) << '\n';
  out << "wd margin: " << margin_text(a.wd_margin)
      << "  weak dominance: " << (a.weak_dominance() ? "holds" : "fails") << '\n';
  out << "strong dominance: "
      << (a.sd_holds ? (*a.sd_holds ? "holds" : "fails") : "n/a (combinatorial)") << '\n';
}

nlohmann::ordered_json analysis_json(const Instance& inst, const InstanceAnalysis& a) {
  nlohmann::ordered_json j;
  const std::size_t n = a.gamma.size();
  j["instance"] = inst.name;
  j["mode"] = to_string(a.mode);
  j["K"] = inst.features;
  j["arms"] = n;
  j["estimated"] = a.estimated;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(arm_label(a, i));
  j["arm_features"] = labels;
  j["raw_cost"] = a.raw_cost;
  j["effective_cost"] = a.effective_cost;
  j["gamma"] = a.gamma;
  j["total"] = a.total;
  nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<double> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = a.disagreement.at(r, c);
    matrix.push_back(row);
  }
  j["disagreement"] = matrix;
  j["optimal_arm"] = a.optimal_arm + 1;
  if (std::isinf(a.wd_margin)) {
    j["wd_margin"] = margin_text(a.wd_margin);
  } else {
    j["wd_margin"] = a.wd_margin;
  }
  j["weak_dominance"] = a.weak_dominance();
  if (a.sd_holds) {
    j["strong_dominance"] = *a.sd_holds;
  } else {
    j["strong_dominance"] = nullptr;
  }
  return j;
}

struct AnalyzeArgs {
  std::string instance;
  bool json = false;
};

struct RunArgs {
  std::string instance;
  std::string algo;
  std::uint64_t horizon = 10000;
  std::size_t reps = 100;
  std::uint64_t seed = 0;
  double a = 0.0;
  double alpha = 0.51;
  std::string out;
  std::string format;
  std::size_t threads = 0;
};

struct GenArgs {
  std::string preset;
  int case_no = 1;
  std::string model = "independent";
  double p0 = 0.5;
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  const Instance inst = load_instance(args.instance);
  const InstanceAnalysis a = analyze(inst);
  if (args.json) {
    out << analysis_json(inst, a).dump(2) << '\n';
  } else {
    print_analysis(out, inst, a);
  }
  return kOk;
}

int cmd_run(const RunArgs& args, std::ostream& out) {
  const auto algo = parse_algorithm(args.algo);
  if (!algo) throw ConfigError("unknown algorithm '" + args.algo + "'");
  const Instance inst = load_instance(args.instance);
  if (algorithm_mode(*algo) != inst.mode) {
    throw ConfigError("algorithm '" + args.algo + "' needs a " +
                      to_string(algorithm_mode(*algo)) + " instance but '" + inst.name +
                      "' is " + to_string(inst.mode));
  }
  PolicyParams params;
  params.a = args.a;
  params.alpha = args.alpha;

  const ArmLayout layout = make_layout(inst);
  const InstanceAnalysis analysis = analyze(inst, layout);
  ExperimentConfig cfg;
  cfg.horizon = args.horizon;
  cfg.reps = args.reps;
  cfg.master_seed = args.seed;
  cfg.instance_id = inst.name;
  cfg.algorithm_id = std::string(to_string(*algo));
  cfg.threads = args.threads;

  // Validate parameters once up front so errors surface as configuration errors.
  make_policy(*algo, inst, params);

  const auto started = std::chrono::steady_clock::now();
  const auto traces = run_experiment(
      inst, layout, analysis, [&] { return make_policy(*algo, inst, params); }, cfg);
  const RegretBand band = aggregate(traces);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  fs::path path = args.out;
  if (path.empty()) {
    const char* dir = std::getenv(kOutDirEnv);
    path = fs::path(dir ? dir : ".") / (inst.name + "_" + cfg.algorithm_id + ".csv");
  }
  std::string format = args.format;
  if (format.empty()) format = path.extension() == ".json" ? "json" : "csv";
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path.string());
  if (format == "json") {
    write_json(file, cfg.algorithm_id, band);
  } else {
    write_csv(file, cfg.algorithm_id, band);
  }
  file.close();
  if (!file) throw Error("failed writing " + path.string());

  out << "algo: " << cfg.algorithm_id << " (" << make_policy(*algo, inst, params)->params()
      << ")\n";
  out << "instance: " << inst.name << "  optimal arm: " << (analysis.optimal_arm + 1)
      << "  wd margin: " << margin_text(analysis.wd_margin) << '\n';
  out << "horizon: " << cfg.horizon << "  reps: " << cfg.reps << "  seed: " << cfg.master_seed
      << '\n';
  out << "final mean cumulative regret: " << format_number(band.mean.back());
  if (band.has_ci) {
    out << "  95% CI [" << format_number(band.ci_low.back()) << ", "
        << format_number(band.ci_high.back()) << "]";
  } else {
    out << "  (no CI: fewer than 2 repetitions)";
  }
  out << '\n';
  out << "runtime: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  out << "wrote: " << path.string() << '\n';
  out.unsetf(std::ios::floatfield);
  return kOk;
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const auto dataset = parse_dataset(args.preset);
  if (!dataset) throw ConfigError("unknown preset '" + args.preset + "' (heart or pima)");
  const auto model = parse_model(args.model);
  if (!model) throw ConfigError("unknown model '" + args.model + "' (independent or nested)");
  const Instance inst = make_preset(*dataset, args.case_no, *model, args.p0);
  WriteOptions options;
  options.cumulative_costs = true;
  options.header = preset_header(*dataset, args.case_no, *model);
  if (args.out.empty() || args.out == "-") {
    write_instance(out, inst, options);
  } else {
    const fs::path path = args.out;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    write_instance(file, inst, options);
    out << "wrote: " << path.string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost-sensitive unsupervised feature selection: bandit policies and oracle"};
  app.name("csmd");
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print the exact oracle analysis of an instance");
  analyze_cmd->add_option("--instance", analyze_args.instance, "Instance file")->required();
  analyze_cmd->add_flag("--json", analyze_args.json, "Machine-readable output");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run a regret experiment and write the band CSV");
  run_cmd->add_option("--instance", run_args.instance, "Instance file")->required();
  run_cmd->add_option("--algo", run_args.algo, "ts | kl | ucb1 | cts | escb-kl | escb-ucb1")
      ->required()
      ->check(CLI::IsMember({"ts", "kl", "ucb1", "cts", "escb-kl", "escb-ucb1"}));
  run_cmd->add_option("--horizon", run_args.horizon, "Rounds per repetition")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--reps", run_args.reps, "Repetitions")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run_args.seed, "Master seed");
  run_cmd->add_option("--a", run_args.a, "kl-UCB exploration parameter a (default 0)")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--alpha", run_args.alpha, "UCB1 exploration parameter (default 0.51)");
  run_cmd->add_option("--out", run_args.out,
                      std::string("Output path (default $") + kOutDirEnv + "/<instance>_<algo>.csv)");
  run_cmd->add_option("--format", run_args.format, "csv | json (default from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--threads", run_args.threads, "Worker threads (0 = all cores)");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write a surrogate instance from the published table");
  gen_cmd->add_option("--preset", gen_args.preset, "heart | pima")->required();
  gen_cmd->add_option("--case", gen_args.case_no, "Case 1..5")->required();
  gen_cmd->add_option("--model", gen_args.model, "independent | nested");
  gen_cmd->add_option("--p0", gen_args.p0, "P(Y = 1)")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--out", gen_args.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*run_cmd) return cmd_run(run_args, out);
    if (*gen_cmd) return cmd_gen(gen_args, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("csmd");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace csmd::cli

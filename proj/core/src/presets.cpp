#include "csmd/presets.hpp"

#include <algorithm>
#include <vector>

#include "csmd/error.hpp"

namespace csmd {

namespace {

constexpr PresetTable kPima{
    "pima",
    {0.3125, 0.2331, 0.2279},
    {4, 29, 46},
    {{{0.01, 0.0106, 0.015},
      {0.01, 0.004, 0.0038},
      {0.01, 0.0113, 0.015},
      {0.0001, 0.0001, 0.0001},
      {0.01, 0.002, 0.0055}}},
};

constexpr PresetTable kHeart{
    "heart",
    {0.29292, 0.20202, 0.14815},
    {32, 397, 601},
    {{{0.0001, 0.0008, 0.001},
      {0.0001, 0.0001, 0.00035},
      {0.0001, 0.0009, 0.001},
      {0.00001, 0.00004, 0.0001},
      {0.0042, 0.0001, 0.00027}}},
};

}  // namespace

const PresetTable& preset_table(Dataset dataset) {
  return dataset == Dataset::heart ? kHeart : kPima;
}

std::optional<Dataset> parse_dataset(std::string_view text) noexcept {
  if (text == "heart") return Dataset::heart;
  if (text == "pima") return Dataset::pima;
  return std::nullopt;
}

std::string_view to_string(Dataset dataset) noexcept { return preset_table(dataset).name; }

std::optional<SurrogateModel> parse_model(std::string_view text) noexcept {
  if (text == "independent") return SurrogateModel::independent;
  if (text == "nested") return SurrogateModel::nested;
  return std::nullopt;
}

std::string_view to_string(SurrogateModel model) noexcept {
  return model == SurrogateModel::independent ? "independent" : "nested";
}

JointPmf nested_error_pmf(std::span<const double> error_rates, double p0) {
  const std::size_t n = error_rates.size();
  JointPmf pmf;
  pmf.outputs = n;
  pmf.probability.assign(std::size_t{1} << (n + 1), 0.0);

  // Breakpoints of U on [0, 1]; within each interval the set of wrong classifiers is fixed.
  std::vector<double> cuts(error_rates.begin(), error_rates.end());
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double width = cuts[k + 1] - cuts[k];
    if (width <= 0.0) continue;
    const double u = 0.5 * (cuts[k] + cuts[k + 1]);
    for (std::size_t y = 0; y <= 1; ++y) {
      const double py = y == 1 ? p0 : 1.0 - p0;
      if (py <= 0.0) continue;
      std::size_t idx = y;
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t out = (u < error_rates[c]) ? (1 - y) : y;
        idx |= out << (c + 1);
      }
      pmf.probability[idx] += py * width;
    }
  }
  return pmf;
}

Instance make_preset(Dataset dataset, int case_no, SurrogateModel model, double p0) {
  if (case_no < 1 || case_no > kPresetCases) {
    throw ConfigError("case must be between 1 and " + std::to_string(kPresetCases) + ", got " +
                      std::to_string(case_no));
  }
  const PresetTable& table = preset_table(dataset);
  Instance inst;
  inst.name = std::string(table.name) + "-case" + std::to_string(case_no) + "-" +
              std::string(to_string(model));
  inst.mode = Mode::cascade;
  inst.features = 3;
  inst.feature_costs =
      cost_increments(std::vector<double>(table.cumulative_costs.begin(), table.cumulative_costs.end()));
  const auto& row = table.lambda[static_cast<std::size_t>(case_no - 1)];
  inst.lambda.assign(row.begin(), row.end());
  if (model == SurrogateModel::independent) {
    inst.env = IndependentError{p0, {table.error_rates.begin(), table.error_rates.end()}};
  } else {
    inst.env = nested_error_pmf(table.error_rates, p0);
  }
  validate(inst);
  return inst;
}

std::string preset_header(Dataset dataset, int case_no, SurrogateModel model) {
  std::string h;
  h += "Surrogate instance: " + std::string(to_string(dataset)) + ", case " +
       std::to_string(case_no) + ", " + std::string(to_string(model)) + " error model.\n";
  h += "Error rates, cumulative classifier costs and lambda are the published dataset values.\n";
  h += "The joint law is simulated, so weak-dominance status must be checked with\n";
  h += "`csmd analyze`, not assumed from the published table.";
  return h;
}

}  // namespace csmd

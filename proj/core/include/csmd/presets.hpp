#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "csmd/instance.hpp"

namespace csmd {

enum class Dataset { heart, pima };

/// Joint law used to turn per-classifier error rates into a simulated environment.
enum class SurrogateModel {
  /// Each classifier flips the label independently with its error rate.
  independent,
  /// Errors are nested: one uniform draw U, classifier i is wrong iff U < gamma_i.
  /// Disagreement is then |gamma_i - gamma_j|, the smallest value consistent with the rates.
  nested,
};

/// Published three-classifier parameters for one dataset.
struct PresetTable {
  std::string_view name;
  std::array<double, 3> error_rates;
  /// Running totals: classifier i pays for tests 1..i.
  std::array<double, 3> cumulative_costs;
  /// lambda row for cases 1..5.
  std::array<std::array<double, 3>, 5> lambda;
};

inline constexpr int kPresetCases = 5;

const PresetTable& preset_table(Dataset dataset);

std::optional<Dataset> parse_dataset(std::string_view text) noexcept;
std::string_view to_string(Dataset dataset) noexcept;
std::optional<SurrogateModel> parse_model(std::string_view text) noexcept;
std::string_view to_string(SurrogateModel model) noexcept;

/// Cascade instance for one case (1..5). Throws ConfigError on an unknown case.
Instance make_preset(Dataset dataset, int case_no, SurrogateModel model, double p0 = 0.5);

/// Comment block written at the top of generated instance files.
std::string preset_header(Dataset dataset, int case_no, SurrogateModel model);

/// Joint PMF of the nested-error model over (Y, Y^1..Y^n).
JointPmf nested_error_pmf(std::span<const double> error_rates, double p0);

}  // namespace csmd

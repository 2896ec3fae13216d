#include "csmd/analysis.hpp"

#include "csmd/environment.hpp"

namespace csmd {

InstanceAnalysis analyze(const Instance& instance, const ArmLayout& layout) {
  validate(instance);
  InstanceAnalysis out;
  out.mode = instance.mode;
  out.raw_cost = layout.costs.raw;
  out.effective_cost = layout.costs.effective;
  out.mask = layout.mask;

  const ErrorRates rates = exact_error_rates(instance.env);
  out.estimated = rates.estimated;
  out.gamma = to_arm_order(layout, rates.gamma);

  const PairMatrix<double> by_coord = exact_disagreement(instance.env);
  const std::size_t n = layout.arm_count();
  out.disagreement = PairMatrix<double>(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.disagreement(i, j) = by_coord.at(layout.coordinate[i], layout.coordinate[j]);
    }
  }

  out.total.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.total[i] = out.effective_cost[i] + out.gamma[i];
  out.optimal_arm = optimal_arm(out.effective_cost, out.gamma);
  out.wd_margin = wd_margin(out.effective_cost, out.disagreement, out.optimal_arm);
  if (instance.mode == Mode::cascade) out.sd_holds = sd_holds(instance.env);
  return out;
}

InstanceAnalysis analyze(const Instance& instance) {
  validate(instance);
  return analyze(instance, make_layout(instance));
}

}  // namespace csmd

#include "csmd/layout.hpp"

#include <numeric>

namespace csmd {

ArmLayout make_layout(const Instance& instance, std::size_t subset_cap) {
  ArmLayout layout;
  layout.mode = instance.mode;
  if (instance.mode == Mode::cascade) {
    layout.costs = effective_costs(instance);
    const std::size_t k = instance.features;
    layout.coordinate.resize(k);
    std::iota(layout.coordinate.begin(), layout.coordinate.end(), std::size_t{0});
    layout.observable.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      layout.observable[i].resize(i + 1);
      std::iota(layout.observable[i].begin(), layout.observable[i].end(), std::size_t{0});
    }
    return layout;
  }
  SubsetIndexing idx = enumerate_subsets(instance, subset_cap);
  layout.costs = EffectiveCosts{idx.raw_cost, idx.effective_cost};
  layout.coordinate.reserve(idx.arm_count());
  for (std::uint32_t m : idx.mask) layout.coordinate.push_back(m - 1);
  layout.observable = std::move(idx.basic_arms);
  layout.mask = std::move(idx.mask);
  return layout;
}

std::vector<double> to_arm_order(const ArmLayout& layout, const std::vector<double>& by_coordinate) {
  std::vector<double> out(layout.arm_count());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = by_coordinate.at(layout.coordinate[s]);
  return out;
}

}  // namespace csmd

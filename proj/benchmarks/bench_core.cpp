#include <benchmark/benchmark.h>

#include <random>

#include "csmd/cascade.hpp"
#include "csmd/combinatorial.hpp"
#include "csmd/environment.hpp"
#include "csmd/indices.hpp"
#include "csmd/selection.hpp"
#include "csmd/subsets.hpp"

namespace {

using namespace csmd;

void BM_KlUcbIndex(benchmark::State& state) {
  double p = 0.1;
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kl_ucb_index(p, n, 10000));
    p = p < 0.9 ? p + 0.01 : 0.1;
    n = n < 5000 ? n + 7 : 1;
  }
}
BENCHMARK(BM_KlUcbIndex);

void BM_TsSample(benchmark::State& state) {
  Engine engine(1);
  for (auto _ : state) benchmark::DoNotOptimize(ts_sample(40, 900, engine));
}
BENCHMARK(BM_TsSample);

void BM_ComputeSets(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> cost(k);
  double c = 0;
  for (double& x : cost) x = (c += 0.2 * u(rng));
  PairMatrix<double> p(k);
  for (double& v : p.raw()) v = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(compute_sets(cost, p));
}
BENCHMARK(BM_ComputeSets)->Arg(3)->Arg(8)->Arg(32);

void BM_SubsetSets(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const std::size_t arms = (std::size_t{1} << k) - 1;
  std::vector<double> costs(k);
  for (std::size_t f = 0; f < k; ++f) costs[f] = 0.05 * static_cast<double>(f + 1);
  const SubsetIndexing idx = enumerate_subsets(costs, std::vector<double>(arms, 1.0));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PairMatrix<double> p(arms);
  for (double& v : p.raw()) v = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(compute_subset_sets(idx, p));
}
BENCHMARK(BM_SubsetSets)->Arg(3)->Arg(6);

// One select/observe round of a cascade policy against a sampled outcome.
template <typename Make>
void policy_step(benchmark::State& state, Make make) {
  const std::vector<double> cost{0.04, 0.116, 0.1748};
  const EnvironmentModel env = IndependentError{0.5, {0.3125, 0.2331, 0.2279}};
  auto policy = make(cost);
  Sampler sampler(env);
  Engine env_engine(1), policy_engine(2);
  Outcome o;
  std::vector<std::int8_t> fb(3);
  std::uint64_t t = 0;
  for (auto _ : state) {
    sampler.next(env_engine, o);
    const Pull pull = policy->select(++t, policy_engine);
    for (std::size_t a = 0; a < 3; ++a)
      fb[a] = pull.observe_all || a <= pull.arm ? static_cast<std::int8_t>(o.outputs[a]) : kHidden;
    policy->observe(t, pull, fb);
  }
}

void BM_StepTs(benchmark::State& s) { policy_step(s, [](auto& c) { return make_csmd_ts(c); }); }
void BM_StepKl(benchmark::State& s) { policy_step(s, [](auto& c) { return make_csmd_kl(c); }); }
void BM_StepUcb(benchmark::State& s) { policy_step(s, [](auto& c) { return make_csmd_ucb(c); }); }
BENCHMARK(BM_StepTs);
BENCHMARK(BM_StepKl);
BENCHMARK(BM_StepUcb);

}  // namespace

BENCHMARK_MAIN();

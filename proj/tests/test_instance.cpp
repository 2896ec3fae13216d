#include <gtest/gtest.h>

#include <random>

#include "csmd/error.hpp"
#include "csmd/instance.hpp"
#include "csmd/pair_stats.hpp"
#include "csmd/presets.hpp"

namespace csmd {
namespace {

Instance cascade_instance(std::vector<double> costs, std::vector<double> lambda) {
  Instance inst;
  inst.mode = Mode::cascade;
  inst.features = costs.size();
  inst.feature_costs = std::move(costs);
  inst.lambda = std::move(lambda);
  inst.env = IndependentError{0.5, std::vector<double>(inst.features, 0.1)};
  return inst;
}

TEST(EffectiveCosts, HeartCaseOneWeightsCumulativeCosts) {
  // Published cumulative 32/397/601 -> increments 32/365/204.
  const Instance inst = cascade_instance({32, 365, 204}, {0.0001, 0.0008, 0.001});
  const EffectiveCosts ec = effective_costs(inst);
  EXPECT_EQ(ec.raw, (std::vector<double>{32, 397, 601}));
  ASSERT_EQ(ec.effective.size(), 3u);
  EXPECT_NEAR(ec.effective[0], 0.0032, 1e-15);
  EXPECT_NEAR(ec.effective[1], 0.3176, 1e-15);
  EXPECT_NEAR(ec.effective[2], 0.601, 1e-15);
}

TEST(EffectiveCosts, SingleArm) {
  const EffectiveCosts ec = effective_costs(cascade_instance({1}, {1}));
  EXPECT_EQ(ec.effective, std::vector<double>{1.0});
}

TEST(EffectiveCosts, CombinatorialSubsetSums) {
  Instance inst;
  inst.mode = Mode::combinatorial;
  inst.features = 2;
  inst.feature_costs = {2, 3};
  inst.lambda = {1, 1, 1};
  inst.env = IndependentError{0.5, {0.1, 0.1, 0.1}};
  const EffectiveCosts ec = effective_costs(inst);
  EXPECT_EQ(ec.effective, (std::vector<double>{2, 3, 5}));
}

TEST(EffectiveCosts, IsPureAndCascadeRawCostsAreMonotone) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 6;
    std::vector<double> c(k), l(k);
    for (auto& x : c) x = u(rng);
    for (auto& x : l) x = 0.001 + u(rng);
    const Instance inst = cascade_instance(c, l);
    const EffectiveCosts a = effective_costs(inst);
    const EffectiveCosts b = effective_costs(inst);
    EXPECT_EQ(a.raw, b.raw);
    EXPECT_EQ(a.effective, b.effective);
    for (std::size_t i = 1; i < k; ++i) EXPECT_LE(a.raw[i - 1], a.raw[i]);
    for (double e : a.effective) EXPECT_GE(e, 0.0);
  }
}

TEST(Validate, RejectsBrokenInvariants) {
  Instance ok = cascade_instance({1, 2}, {1, 1});
  EXPECT_NO_THROW(validate(ok));

  Instance bad = ok;
  bad.features = 0;
  EXPECT_THROW(validate(bad), ConfigError);

  bad = ok;
  bad.feature_costs[1] = -1.0;
  EXPECT_THROW(validate(bad), ConfigError);

  bad = ok;
  bad.lambda = {1, 0};
  EXPECT_THROW(validate(bad), ConfigError);

  bad = ok;
  bad.lambda = {1, 1, 1};
  EXPECT_THROW(validate(bad), ConfigError);
  EXPECT_THROW(effective_costs(bad), ConfigError);

  bad = ok;
  bad.env = IndependentError{0.5, {0.1, 1.5}};
  EXPECT_THROW(validate(bad), ConfigError);

  bad = ok;
  bad.env = IndependentError{-0.1, {0.1, 0.1}};
  EXPECT_THROW(validate(bad), ConfigError);

  bad = ok;
  bad.mode = Mode::combinatorial;  // needs 3 lambda entries and 3 outputs
  EXPECT_THROW(validate(bad), ConfigError);
}

TEST(Validate, PmfMustSumToOne) {
  Instance inst = cascade_instance({1}, {1});
  JointPmf pmf;
  pmf.outputs = 1;
  pmf.probability = {0.5, 0.0, 0.0, 0.499};
  inst.env = pmf;
  EXPECT_THROW(validate(inst), ConfigError);
  std::get<JointPmf>(inst.env).probability[3] = 0.5;
  EXPECT_NO_THROW(validate(inst));
}

TEST(CostIncrements, RoundTripsAndRejectsDecrease) {
  EXPECT_EQ(cost_increments({4, 29, 46}), (std::vector<double>{4, 25, 17}));
  EXPECT_EQ(cumulative_costs({4, 25, 17}), (std::vector<double>{4, 29, 46}));
  EXPECT_THROW(cost_increments({4, 3}), ConfigError);
}

TEST(PairStats, ThompsonAndUcbCountersAgreeOnOneStream) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.3);
  PairStats stats(5);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t top = round % 5;  // observe a prefix, like a cascade
    for (std::size_t i = 0; i <= top; ++i) {
      for (std::size_t j = i + 1; j <= top; ++j) stats.record(i, j, coin(rng));
    }
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      const PairCounts& c = stats(i, j);
      EXPECT_GE(c.successes, 1u);
      EXPECT_GE(c.failures, 1u);
      EXPECT_LE(c.disagreements, c.comparisons);
      EXPECT_EQ(c.successes - 1, c.disagreements);
      EXPECT_EQ((c.successes - 1) + (c.failures - 1), c.comparisons);
      EXPECT_EQ(&stats(i, j), &stats(j, i));
    }
  }
}

TEST(PairStats, FreshPairHasPriorOnly) {
  PairStats stats(3);
  const PairCounts& c = stats(0, 2);
  EXPECT_EQ(c.successes, 1u);
  EXPECT_EQ(c.failures, 1u);
  EXPECT_EQ(c.comparisons, 0u);
  EXPECT_EQ(stats.empirical(0, 2), 0.0);
}

TEST(Presets, PublishedValues) {
  const Instance pima2 = make_preset(Dataset::pima, 2, SurrogateModel::independent);
  EXPECT_EQ(pima2.lambda, (std::vector<double>{0.01, 0.004, 0.0038}));
  EXPECT_EQ(cumulative_costs(pima2.feature_costs), (std::vector<double>{4, 29, 46}));

  const Instance heart5 = make_preset(Dataset::heart, 5, SurrogateModel::independent);
  EXPECT_EQ(heart5.lambda, (std::vector<double>{0.0042, 0.0001, 0.00027}));
  EXPECT_EQ(std::get<IndependentError>(heart5.env).error_rates,
            (std::vector<double>{0.29292, 0.20202, 0.14815}));

  EXPECT_THROW(make_preset(Dataset::heart, 0, SurrogateModel::independent), ConfigError);
  EXPECT_THROW(make_preset(Dataset::heart, 6, SurrogateModel::nested), ConfigError);
}

}  // namespace
}  // namespace csmd

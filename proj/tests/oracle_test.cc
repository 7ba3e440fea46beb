// Copyright 2026 The PML Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pml/oracle.h"

#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "pml/correlated_binary.h"
#include "pml/database_model.h"
#include "pml/leakage.h"
#include "pml/mechanisms.h"
#include "pml/random.h"

namespace pml {
namespace {

using ::testing::HasSubstr;

FiniteDistribution Dist(std::vector<double> p) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < p.size(); ++i)
    labels.push_back(std::to_string(i));
  return *FiniteDistribution::FromProbabilities(labels, p);
}

std::vector<LogReal> Column(std::vector<double> c) {
  std::vector<LogReal> out;
  for (double v : c) out.push_back(LogReal::FromLinear(v));
  return out;
}

TEST(GainFunctionTest, Validation) {
  EXPECT_FALSE(GainFunction::Create({}).ok());
  EXPECT_FALSE(GainFunction::Create({{1.0, 2.0}, {1.0}}).ok());
  EXPECT_FALSE(GainFunction::Create({{1.0, -2.0}}).ok());
  GainFunction g = GainFunction::Indicator(3, 1);
  EXPECT_EQ(g.num_secrets(), 3u);
  EXPECT_EQ(g.num_guesses(), 1u);
  EXPECT_EQ(g(1, 0), 1.0);
  EXPECT_EQ(g(2, 0), 0.0);
}

TEST(GainRatioTest, ConstantGainIsZero) {
  const FiniteDistribution prior = Dist({0.2, 0.3, 0.5});
  const std::vector<LogReal> column = Column({0.9, 0.1, 0.4});
  GainFunction g = *GainFunction::Create({{2.0, 2.0}, {2.0, 2.0}, {2.0, 2.0}});
  EXPECT_NEAR(*GainRatio(prior, column, g), 0.0, 1e-15);
}

TEST(GainRatioTest, IndicatorGainIsPosteriorRatio) {
  const FiniteDistribution prior = Dist({0.2, 0.3, 0.5});
  const std::vector<double> c = {0.9, 0.1, 0.4};
  const double py = 0.2 * 0.9 + 0.3 * 0.1 + 0.5 * 0.4;
  for (std::size_t x = 0; x < 3; ++x) {
    const double want = std::log((prior.prob(x) * c[x] / py) / prior.prob(x));
    EXPECT_NEAR(*GainRatio(prior, Column(c), GainFunction::Indicator(3, x)),
                want, 1e-14);
  }
  EXPECT_NEAR(*GainRatio(prior, Column(c), GainFunction::Indicator(3, 0)),
              PmlAt(prior, Column(c))->pml, 1e-14);
}

TEST(GainRatioTest, DegenerateGain) {
  GainFunction zero = *GainFunction::Create({{0.0}, {0.0}});
  absl::StatusOr<double> r =
      GainRatio(Dist({0.5, 0.5}), Column({0.5, 0.5}), zero);
  EXPECT_THAT(r.status().message(), HasSubstr("degenerate gain"));
}

TEST(RandomizedFunctionRatioTest, IndependentKernelIsZero) {
  FiniteMechanism kernel = *FiniteMechanism::Create(
      {"0", "1", "2"}, {"u", "v"}, {{0.3, 0.7}, {0.3, 0.7}, {0.3, 0.7}});
  EXPECT_NEAR(*RandomizedFunctionRatio(Dist({0.2, 0.3, 0.5}),
                                       Column({0.9, 0.1, 0.4}), kernel),
              0.0, 1e-15);
}

TEST(RandomizedFunctionRatioTest, IdentityKernelUniformPriorIsPml) {
  const FiniteDistribution prior = Dist({0.25, 0.25, 0.25, 0.25});
  const std::vector<LogReal> column = Column({0.9, 0.1, 0.4, 0.3});
  FiniteMechanism id = IdentityMechanism(prior.labels());
  EXPECT_NEAR(*RandomizedFunctionRatio(prior, column, id),
              PmlAt(prior, column)->pml, 1e-14);
}

TEST(RandomizedFunctionRatioTest, RandomKernelsNeverExceedPml) {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t nx = 1 + rng.UniformIndex(8);
    const std::size_t nu = 1 + rng.UniformIndex(6);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < nx; ++i) labels.push_back(std::to_string(i));
    std::vector<Label> u;
    for (std::size_t i = 0; i < nu; ++i) u.push_back(std::to_string(i));
    std::vector<std::vector<double>> rows;
    for (std::size_t x = 0; x < nx; ++x) rows.push_back(rng.SimplexPoint(nu));
    FiniteMechanism kernel = *FiniteMechanism::Create(labels, u, rows);
    const FiniteDistribution prior =
        *FiniteDistribution::FromProbabilities(labels, rng.SimplexPoint(nx));
    std::vector<double> c;
    for (std::size_t x = 0; x < nx; ++x) c.push_back(rng.Uniform01());
    EXPECT_LE(*RandomizedFunctionRatio(prior, Column(c), kernel),
              PmlAt(prior, Column(c))->pml + 1e-12);
  }
}

TEST(EnumerateJointTest, CorrelatedModelHasSixteenAtoms) {
  CorrelatedBinaryModel m = *CorrelatedBinaryModel::Create(3, 0.25, 0.5);
  ExplicitJointModel joint = *EnumerateJoint(m);
  EXPECT_EQ(joint.joint().size(), 16u);
  double total = 0.0;
  for (double p : joint.joint().Probabilities()) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
  // P(D_- = 111 | D_1 = 1) = eta.
  FiniteDistribution rest = *joint.ConditionOnEntry(0, 1);
  EXPECT_NEAR(rest.prob(7), 0.5, 1e-12);
}

TEST(EnumerateJointTest, ProductAtom) {
  ProductModel m = *ProductModel::Identical(Dist({0.7, 0.3}), 3);
  ExplicitJointModel joint = *EnumerateJoint(m);
  EXPECT_EQ(joint.joint().label(6), "110");
  EXPECT_NEAR(joint.joint().prob(6), 0.063, 1e-15);
}

TEST(EnumerateJointTest, CutoffExceeded) {
  CorrelatedBinaryModel m = *CorrelatedBinaryModel::Create(16, 0.25, 0.5);
  absl::StatusOr<ExplicitJointModel> r = EnumerateJoint(m);
  EXPECT_THAT(r.status().message(), HasSubstr("enumeration cutoff exceeded"));
  EXPECT_TRUE(
      EnumerateJoint(*CorrelatedBinaryModel::Create(15, 0.25, 0.5)).ok());
}

TEST(OracleTrialsTest, DefaultConfigPasses) {
  OracleTrialReport r = *RunOracleTrials({});
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.seed, OracleTrialConfig{}.seed);
  EXPECT_EQ(r.trials_run, 21000u);
  EXPECT_LE(r.max_achievability_error, 1e-12);
  EXPECT_LE(r.max_gain_violation, 1e-12);
  EXPECT_LE(r.max_kernel_violation, 1e-12);
}

TEST(OracleTrialsTest, EmptyTrialSet) {
  OracleTrialConfig config;
  config.achievability_trials = 0;
  config.gain_trials = 0;
  config.kernel_trials = 0;
  absl::StatusOr<OracleTrialReport> r = RunOracleTrials(config);
  EXPECT_THAT(r.status().message(), HasSubstr("empty trial set"));
}

TEST(OracleTrialsTest, SameSeedSameReport) {
  OracleTrialConfig config;
  config.achievability_trials = 50;
  config.gain_trials = 50;
  config.kernel_trials = 50;
  OracleTrialReport a = *RunOracleTrials(config);
  OracleTrialReport b = *RunOracleTrials(config);
  EXPECT_EQ(a.max_achievability_error, b.max_achievability_error);
  EXPECT_EQ(a.max_gain_violation, b.max_gain_violation);
  EXPECT_EQ(a.max_kernel_violation, b.max_kernel_violation);
}

TEST(OracleTrialsTest, FixedCasesAreIncluded) {
  OracleTrialConfig config;
  config.achievability_trials = 1;
  config.gain_trials = 0;
  config.kernel_trials = 0;
  const std::vector<OracleCase> cases = {
      {Dist({0.5, 0.5}), *RandomizedResponse(0.25)}};
  OracleTrialReport r = *RunOracleTrials(config, cases);
  EXPECT_EQ(r.trials_run, 202u);
  EXPECT_TRUE(r.passed);
}

}  // namespace
}  // namespace pml

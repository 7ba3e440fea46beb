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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "absl/status/status.h"
#include "boost/multiprecision/cpp_bin_float.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "pml/correlated_binary.h"
#include "pml/database_model.h"
#include "pml/distribution.h"
#include "pml/log_real.h"
#include "pml/oracle.h"
#include "testing/brute_force.h"

namespace pml {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(LogSumExpTest, NormalizedPair) {
  const std::vector<double> v = {std::log(0.25), std::log(0.75)};
  absl::StatusOr<double> r = LogSumExp(v);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(*r, 0.0, 1e-15);
}

TEST(LogSumExpTest, ZeroZeroIsLogTwo) {
  const std::vector<double> v = {0.0, 0.0};
  EXPECT_NEAR(*LogSumExp(v), std::log(2.0), 1e-15);
}

TEST(LogSumExpTest, LargeArgumentsMatchMultiprecision) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big exact = log(exp(Big(700)) + exp(Big(700)));
  const std::vector<double> v = {700.0, 700.0};
  absl::StatusOr<double> r = LogSumExp(v);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(std::isfinite(*r));
  EXPECT_NEAR(*r, exact.convert_to<double>(), 1e-12 * 700.0);
}

TEST(LogSumExpTest, EmptyIsError) {
  absl::StatusOr<double> r = LogSumExp(std::span<const double>());
  EXPECT_EQ(r.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(r.status().message(), HasSubstr("empty aggregation"));
  absl::StatusOr<LogReal> l = LogSumExp(std::span<const LogReal>());
  EXPECT_THAT(l.status().message(), HasSubstr("empty aggregation"));
}

TEST(LogSumExpTest, AllZeroMassStaysZero) {
  const std::vector<double> v = {-kInf, -kInf};
  EXPECT_EQ(*LogSumExp(v), -kInf);
}

TEST(LogSumExpTest, WideSpanMatchesMultiprecision) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-300.0, 300.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + trial % 17);
    for (double& x : v) x = u(gen);
    Big sum = 0;
    for (double x : v) sum += exp(Big(x));
    const double exact = log(sum).convert_to<double>();
    EXPECT_NEAR(*LogSumExp(v), exact, 1e-12 * std::max(1.0, std::fabs(exact)));
  }
}

TEST(LogSumExpTest, PermutationInvariantAndMonotone) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(8);
    for (double& x : v) x = u(gen);
    const double base = *LogSumExp(v);
    std::vector<double> shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_NEAR(*LogSumExp(shuffled), base, 1e-13 * std::max(1.0, base));
    std::vector<double> bumped = v;
    bumped[trial % 8] += 0.5;
    EXPECT_GE(*LogSumExp(bumped), base);
  }
}

TEST(LogRealTest, ArithmeticStaysInLogDomain) {
  const LogReal big = LogReal::FromLog(1000.0);
  const LogReal sum = big + big;
  EXPECT_NEAR(sum.log(), 1000.0 + std::log(2.0), 1e-12);
  EXPECT_NEAR((big * big).log(), 2000.0, 1e-12);
  EXPECT_NEAR((big / big).log(), 0.0, 1e-12);
  EXPECT_TRUE((LogReal::Zero() + LogReal::Zero()).IsZero());
  EXPECT_EQ((LogReal::Zero() + big).log(), 1000.0);
  EXPECT_LT(LogReal::FromLinear(0.2), LogReal::FromLinear(0.3));
}

TEST(LogRealTest, LogTwoPowMinusOne) {
  EXPECT_NEAR(LogTwoPowMinusOne(1), 0.0, 1e-15);
  EXPECT_NEAR(LogTwoPowMinusOne(3), std::log(7.0), 1e-15);
  EXPECT_NEAR(LogTwoPowMinusOne(2000), 2000 * std::log(2.0), 1e-9);
}

TEST(LogRealTest, LogBinomial) {
  EXPECT_NEAR(LogBinomial(10, 3), std::log(120.0), 1e-12);
  EXPECT_NEAR(LogBinomial(5, 0), 0.0, 1e-12);
  EXPECT_EQ(LogBinomial(5, 6), -kInf);
  EXPECT_EQ(LogBinomial(5, -1), -kInf);
}

TEST(SignedLogRealTest, MatchesLinearArithmetic) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = u(gen);
    const double b = u(gen);
    const SignedLogReal sa = SignedLogReal::FromLinear(a);
    const SignedLogReal sb = SignedLogReal::FromLinear(b);
    EXPECT_NEAR((sa + sb).ToLinear(), a + b,
                1e-12 * (std::fabs(a) + std::fabs(b)));
    EXPECT_NEAR((sa - sb).ToLinear(), a - b,
                1e-12 * (std::fabs(a) + std::fabs(b)));
    EXPECT_NEAR((sa * sb).ToLinear(), a * b, 1e-12 * std::fabs(a * b));
  }
  EXPECT_EQ((SignedLogReal::FromLinear(2.0) - SignedLogReal::FromLinear(2.0))
                .ToLinear(),
            0.0);
}

TEST(FiniteDistributionTest, ValidatesMass) {
  const std::vector<double> bad = {0.5, 0.6};
  absl::StatusOr<FiniteDistribution> d =
      FiniteDistribution::FromProbabilities({"a", "b"}, bad);
  EXPECT_EQ(d.status().code(), absl::StatusCode::kInvalidArgument);
  const std::vector<double> negative = {1.5, -0.5};
  EXPECT_FALSE(
      FiniteDistribution::FromProbabilities({"a", "b"}, negative).ok());
  const std::vector<double> short_list = {1.0};
  EXPECT_FALSE(
      FiniteDistribution::FromProbabilities({"a", "b"}, short_list).ok());
}

TEST(FiniteDistributionTest, FullSupportFlagAndArgMin) {
  const std::vector<double> p = {0.25, 0.5, 0.25};
  FiniteDistribution d =
      *FiniteDistribution::FromProbabilities({"a", "b", "c"}, p);
  EXPECT_TRUE(d.full_support());
  EXPECT_EQ(d.ArgMin(), 0u);
  EXPECT_EQ(*d.IndexOf("c"), 2u);
  EXPECT_FALSE(d.IndexOf("z").has_value());
  const std::vector<double> q = {0.0, 1.0};
  FiniteDistribution e = *FiniteDistribution::FromProbabilities({"a", "b"}, q);
  EXPECT_FALSE(e.full_support());
}

TEST(FiniteDistributionTest, RandomConstructionsAreNormalized) {
  std::mt19937_64 gen(5);
  std::exponential_distribution<double> expo(1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 9;
    std::vector<LogReal> w;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < k; ++i) {
      w.push_back(LogReal::FromLinear(expo(gen)));
      labels.push_back(std::to_string(i));
    }
    FiniteDistribution d = *FiniteDistribution::FromLogWeights(labels, w);
    std::vector<LogReal> lp(d.log_probs().begin(), d.log_probs().end());
    EXPECT_NEAR(LogSumExp(lp)->log(), 0.0, 1e-9);
    for (LogReal l : lp) EXPECT_TRUE(l.IsFinite());
  }
}

TEST(JointFiniteTest, MarginalsAndPosterior) {
  const std::vector<double> p = {0.25, 0.75};
  FiniteDistribution prior =
      *FiniteDistribution::FromProbabilities({"0", "1"}, p);
  const std::vector<std::vector<LogReal>> rows = {
      {LogReal::FromLinear(0.9), LogReal::FromLinear(0.1), LogReal::Zero()},
      {LogReal::FromLinear(0.2), LogReal::FromLinear(0.8), LogReal::Zero()}};
  JointFinite joint = *JointFinite::FromChannel(prior, {"a", "b", "c"}, rows);
  FiniteDistribution x = joint.XMarginal();
  EXPECT_NEAR(x.prob(0), 0.25, 1e-12);
  FiniteDistribution y = joint.YMarginal();
  EXPECT_NEAR(y.prob(0), 0.25 * 0.9 + 0.75 * 0.2, 1e-12);
  EXPECT_NEAR(y.prob(1), 0.25 * 0.1 + 0.75 * 0.8, 1e-12);
  FiniteDistribution post = joint.Posterior(0);
  EXPECT_NEAR(post.prob(0), 0.225 / 0.375, 1e-12);
  FiniteDistribution fallback = joint.Posterior(2);
  EXPECT_NEAR(fallback.prob(0), 0.25, 1e-12);
}

TEST(MarginalOfEntryTest, ProductBernoulli) {
  const std::vector<double> p = {0.7, 0.3};
  FiniteDistribution law =
      *FiniteDistribution::FromProbabilities({"0", "1"}, p);
  ProductModel model = *ProductModel::Identical(law, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    FiniteDistribution m = *model.MarginalOfEntry(i);
    EXPECT_NEAR(m.prob(1), 0.3, 1e-12);
  }
  EXPECT_EQ(model.MarginalOfEntry(4).status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(MarginalOfEntryTest, CorrelatedFirstEntryIsAlpha) {
  for (std::int64_t n : {1, 5, 100, 5000}) {
    CorrelatedBinaryModel model = *CorrelatedBinaryModel::Create(n, 0.25, 0.5);
    EXPECT_NEAR(model.MarginalOfEntry(0)->prob(0), 0.25, 1e-12) << n;
  }
}

TEST(MarginalOfEntryTest, CorrelatedMatchesEnumeration) {
  CorrelatedBinaryModel model = *CorrelatedBinaryModel::Create(4, 0.25, 0.5);
  for (int j = 0; j < 5; ++j) {
    const std::vector<long double> want =
        testing::CorrelatedEntryMarginal(4, 0.25L, 0.5L, j);
    FiniteDistribution got = *model.MarginalOfEntry(j);
    EXPECT_NEAR(got.prob(0), static_cast<double>(want[0]), 1e-12) << j;
    EXPECT_NEAR(got.prob(1), static_cast<double>(want[1]), 1e-12) << j;
  }
}

TEST(ConditionOnEntryTest, ProductIsUnchanged) {
  const std::vector<double> p = {0.7, 0.3};
  FiniteDistribution law =
      *FiniteDistribution::FromProbabilities({"0", "1"}, p);
  ProductModel model = *ProductModel::Identical(law, 3);
  FiniteDistribution rest = *model.ConditionOnEntry(1, 0);
  ASSERT_EQ(rest.size(), 4u);
  EXPECT_THAT(rest.labels(), ElementsAre("00", "01", "10", "11"));
  EXPECT_NEAR(rest.prob(0), 0.49, 1e-12);
  EXPECT_NEAR(rest.prob(1), 0.21, 1e-12);
  EXPECT_NEAR(rest.prob(3), 0.09, 1e-12);
}

TEST(ConditionOnEntryTest, CorrelatedFirstEntry) {
  CorrelatedBinaryModel model = *CorrelatedBinaryModel::Create(4, 0.25, 0.5);
  FiniteDistribution rest = *model.ConditionOnEntry(0, 1);
  ASSERT_EQ(rest.size(), 16u);
  for (std::size_t s = 0; s < 16; ++s) {
    EXPECT_NEAR(rest.prob(s), s == 15 ? 0.5 : 0.5 / 15.0, 1e-12) << s;
  }
  FiniteDistribution zero = *model.ConditionOnEntry(0, 0);
  EXPECT_NEAR(zero.prob(0), 0.5, 1e-12);
}

TEST(ConditionOnEntryTest, CorrelatedInnerEntryMatchesEnumeration) {
  CorrelatedBinaryModel model = *CorrelatedBinaryModel::Create(3, 0.25, 0.5);
  const std::vector<long double> joint =
      testing::CorrelatedJoint(3, 0.25L, 0.5L);
  FiniteDistribution got = *model.ConditionOnEntry(2, 0);
  // Remaining entries (0, 1, 3) in order.
  std::vector<long double> want(8, 0.0L);
  long double total = 0.0L;
  for (std::uint64_t x = 0; x < joint.size(); ++x) {
    if (testing::BitOf(x, 4, 2) != 0) continue;
    const int idx = testing::BitOf(x, 4, 0) * 4 + testing::BitOf(x, 4, 1) * 2 +
                    testing::BitOf(x, 4, 3);
    want[idx] += joint[x];
    total += joint[x];
  }
  for (int s = 0; s < 8; ++s) {
    EXPECT_NEAR(got.prob(s), static_cast<double>(want[s] / total), 1e-12) << s;
  }
}

TEST(ConditionOnEntryTest, ZeroProbabilitySymbolFails) {
  const std::vector<double> joint = {0.5, 0.5, 0.0, 0.0};
  ExplicitJointModel model = *ExplicitJointModel::Create(
      2, {"0", "1"},
      *FiniteDistribution::FromProbabilities({"00", "01", "10", "11"}, joint));
  absl::StatusOr<FiniteDistribution> r = model.ConditionOnEntry(0, 1);
  EXPECT_THAT(r.status().message(), HasSubstr("unsupported condition"));
}

TEST(DatabaseModelTest, TotalProbabilityReconstructsJoint) {
  std::mt19937_64 gen(19);
  for (std::size_t n : {2u, 5u, 8u, 12u}) {
    CorrelatedBinaryModel model = *CorrelatedBinaryModel::Create(
        static_cast<std::int64_t>(n) - 1, 0.3, 0.6);
    ExplicitJointModel joint = *EnumerateJoint(model);
    const std::size_t entry = gen() % n;
    FiniteDistribution marginal = *model.MarginalOfEntry(entry);
    std::vector<FiniteDistribution> conditionals;
    for (std::size_t d = 0; d < 2; ++d) {
      conditionals.push_back(*model.ConditionOnEntry(entry, d));
    }
    const DatabaseShape shape = model.shape();
    std::vector<std::size_t> db(n);
    for (std::uint64_t x = 0; x < *shape.NumDatabases(); ++x) {
      DecodeDatabase(x, shape, db);
      std::uint64_t rest = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != entry) rest = rest * 2 + db[j];
      }
      const double mixed =
          marginal.prob(db[entry]) * conditionals[db[entry]].prob(rest);
      EXPECT_NEAR(mixed, joint.joint().prob(x), 1e-9);
    }
  }
}

TEST(DatabaseEncodingTest, DecodeEncodeRoundTrip) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const DatabaseShape shape{1 + gen() % 6, 1 + gen() % 5};
    const std::uint64_t count = *shape.NumDatabases();
    const std::uint64_t index = gen() % count;
    std::vector<std::size_t> db(shape.num_entries);
    DecodeDatabase(index, shape, db);
    for (std::size_t v : db) EXPECT_LT(v, shape.alphabet_size);
    EXPECT_EQ(EncodeDatabase(db, shape), index);
  }
}

TEST(DatabaseEncodingTest, LabelsAndCutoff) {
  EXPECT_THAT(*DatabaseLabels(2, {"0", "1"}),
              ElementsAre("00", "01", "10", "11"));
  EXPECT_THAT(*DatabaseLabels(1, {"lo", "hi"}), ElementsAre("lo", "hi"));
  absl::StatusOr<std::vector<Label>> big = DatabaseLabels(40, {"0", "1"});
  EXPECT_THAT(big.status().message(), HasSubstr("enumeration cutoff exceeded"));
}

}  // namespace
}  // namespace pml

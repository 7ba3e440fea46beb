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

#include "pml/mechanisms.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "pml/database_model.h"
#include "pml/query.h"

namespace pml {
namespace {

using ::testing::HasSubstr;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Max |f(x) - f(x')| over all neighbor pairs, by direct enumeration.
double BruteSensitivity(const Query& f, DatabaseShape shape) {
  const std::uint64_t count = *shape.NumDatabases();
  std::vector<std::size_t> a(shape.num_entries);
  double best = 0.0;
  for (std::uint64_t x = 0; x < count; ++x) {
    DecodeDatabase(x, shape, a);
    for (std::size_t i = 0; i < shape.num_entries; ++i) {
      std::vector<std::size_t> b = a;
      for (std::size_t d = 0; d < shape.alphabet_size; ++d) {
        if (d == a[i]) continue;
        b[i] = d;
        best = std::max(best, std::fabs(f(a) - f(b)));
      }
    }
  }
  return best;
}

TEST(L1SensitivityTest, EmpiricalFrequency) {
  for (std::size_t n : {2u, 5u, 11u}) {
    const DatabaseShape shape{n, 2};
    EXPECT_NEAR(*L1Sensitivity(Query::EmpiricalFrequency(n), shape),
                1.0 / double(n), 1e-15);
  }
  const DatabaseShape huge{5001, 2};
  EXPECT_NEAR(*L1Sensitivity(Query::EmpiricalFrequency(5001), huge),
              1.0 / 5001.0, 1e-15);
}

TEST(L1SensitivityTest, ConstantIsZero) {
  EXPECT_EQ(*L1Sensitivity(Query::Constant(3.0), DatabaseShape{4, 3}), 0.0);
}

TEST(L1SensitivityTest, CountingOnThreeBitsMatchesEnumeration) {
  const DatabaseShape shape{3, 2};
  const Query counting = Query::Counting();
  EXPECT_EQ(BruteSensitivity(counting, shape), 1.0);
  EXPECT_EQ(*L1Sensitivity(counting, shape), 1.0);
}

TEST(L1SensitivityTest, CustomQueryMatchesEnumeration) {
  const Query f = Query::Custom("weighted", [](std::span<const std::size_t> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += double(i + 1) * x[i];
    return s;
  });
  const DatabaseShape shape{4, 3};
  EXPECT_NEAR(*L1Sensitivity(f, shape), BruteSensitivity(f, shape), 1e-15);
  EXPECT_NEAR(*L1Sensitivity(f, shape), 8.0, 1e-15);
}

TEST(L1SensitivityTest, NonEnumerableWithoutAnalyticFails) {
  const Query f = Query::Custom(
      "opaque", [](std::span<const std::size_t> x) { return double(x[0]); });
  absl::StatusOr<double> r = L1Sensitivity(f, DatabaseShape{64, 2});
  EXPECT_THAT(r.status().message(),
              HasSubstr("sensitivity requires analytic form"));
  const Query g = Query::Custom(
      "opaque", [](std::span<const std::size_t> x) { return double(x[0]); },
      1.0);
  EXPECT_EQ(*L1Sensitivity(g, DatabaseShape{64, 2}), 1.0);
}

TEST(L1SensitivityTest, InvariantUnderSymbolRelabeling) {
  // Swapping symbols 0 and 2 maps counting of symbol 0 onto counting of 2.
  const DatabaseShape shape{4, 3};
  EXPECT_EQ(*L1Sensitivity(Query::Counting(0), shape),
            *L1Sensitivity(Query::Counting(2), shape));
}

TEST(LaplaceForQueryTest, Calibration) {
  for (std::size_t entries : {3u, 8u, 101u}) {
    const DatabaseShape shape{entries, 2};
    QueryLaplaceMechanism m =
        *LaplaceForQuery(Query::EmpiricalFrequency(entries), shape, 0.1);
    EXPECT_NEAR(m.scale(), 10.0 / double(entries), 1e-14);
  }
  QueryLaplaceMechanism counting =
      *LaplaceForQuery(Query::Counting(), DatabaseShape{3, 2}, 0.1);
  EXPECT_NEAR(counting.scale(), 10.0, 1e-14);
  QueryLaplaceMechanism unit =
      *LaplaceForQuery(Query::Counting(), DatabaseShape{3, 2}, 1.0);
  EXPECT_NEAR(unit.scale(), 1.0, 1e-15);
}

TEST(LaplaceForQueryTest, Errors) {
  absl::StatusOr<QueryLaplaceMechanism> degenerate =
      LaplaceForQuery(Query::Constant(1.0), DatabaseShape{3, 2}, 1.0);
  EXPECT_THAT(degenerate.status().message(), HasSubstr("degenerate query"));
  EXPECT_FALSE(
      LaplaceForQuery(Query::Counting(), DatabaseShape{3, 2}, 0.0).ok());
  EXPECT_FALSE(
      LaplaceForQuery(Query::Counting(), DatabaseShape{3, 2}, -1.0).ok());
}

TEST(LaplaceLogDensityTest, Values) {
  EXPECT_NEAR(LaplaceLogDensity(0.0, 1.0, 0.0).log(), std::log(0.5), 1e-15);
  EXPECT_NEAR(LaplaceLogDensity(1.0, 10.0, 1.0).log(), std::log(1.0 / 20.0),
              1e-15);
  EXPECT_NEAR(LaplaceLogDensity(0.5, 2.0, -1.5).log(), std::log(0.25) - 1.0,
              1e-15);
}

TEST(LaplaceLogDensityTest, IntegratesToOne) {
  // Trapezoid rule on [-60b, 60b] around the center.
  const double b = 0.7;
  const double center = 0.3;
  const int steps = 200000;
  const double lo = center - 60 * b;
  const double h = 120 * b / steps;
  double sum = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    sum += w * LaplaceLogDensity(center, b, lo + i * h).ToLinear();
  }
  EXPECT_NEAR(sum * h, 1.0, 1e-6);
}

TEST(RandomizedResponseTest, Rows) {
  FiniteMechanism rr = *RandomizedResponse(0.25);
  const auto m = rr.Matrix();
  EXPECT_NEAR(m[0][0], 0.75, 1e-15);
  EXPECT_NEAR(m[0][1], 0.25, 1e-15);
  EXPECT_NEAR(m[1][0], 0.25, 1e-15);
  EXPECT_NEAR(m[1][1], 0.75, 1e-15);
}

TEST(RandomizedResponseTest, EndpointsAndErrors) {
  const auto identity = RandomizedResponse(0.0)->Matrix();
  EXPECT_EQ(identity[0][0], 1.0);
  EXPECT_EQ(identity[0][1], 0.0);
  const auto free = RandomizedResponse(0.5)->Matrix();
  EXPECT_EQ(free[0], free[1]);
  EXPECT_EQ(RandomizedResponse(0.6).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(RandomizedResponse(-0.1).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(FiniteMechanismTest, RejectsBadRows) {
  absl::StatusOr<FiniteMechanism> m =
      FiniteMechanism::Create({"0", "1"}, {"a", "b"}, {{0.5, 0.4}, {0.5, 0.5}});
  EXPECT_EQ(m.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(m.status().message(), HasSubstr("row 0"));
}

TEST(ProductMechanismTest, FactorsAcrossEntries) {
  FiniteMechanism rr = *RandomizedResponse(0.25);
  FiniteMechanism prod = *ProductMechanism(rr, 2);
  ASSERT_EQ(prod.num_inputs(), 4u);
  ASSERT_EQ(prod.num_outputs(), 4u);
  // P(y = 01 | x = 11) = 0.25 * 0.75.
  EXPECT_NEAR(prod.log_prob(3, 1).ToLinear(), 0.1875, 1e-15);
}

TEST(DpLevelFiniteTest, RandomizedResponse) {
  EXPECT_NEAR(*DpLevelFinite(*RandomizedResponse(0.25), DatabaseShape{1, 2}),
              std::log(3.0), 1e-15);
  FiniteMechanism prod = *ProductMechanism(*RandomizedResponse(0.25), 3);
  EXPECT_NEAR(*DpLevelFinite(prod, DatabaseShape{3, 2}), std::log(3.0), 1e-12);
}

TEST(DpLevelFiniteTest, ConstantAndIdentity) {
  FiniteMechanism constant = *FiniteMechanism::Create(
      {"0", "1"}, {"a", "b", "c"}, {{0.2, 0.3, 0.5}, {0.2, 0.3, 0.5}});
  EXPECT_EQ(*DpLevelFinite(constant, DatabaseShape{1, 2}), 0.0);
  EXPECT_EQ(*DpLevelFinite(IdentityMechanism({"0", "1"}), DatabaseShape{1, 2}),
            kInf);
}

TEST(DpLevelFiniteTest, ZeroIffNeighborRowsIdentical) {
  const std::vector<double> row = {0.1, 0.2, 0.3, 0.4};
  std::vector<std::vector<double>> rows(4, row);
  FiniteMechanism same = *FiniteMechanism::Create({"00", "01", "10", "11"},
                                                  {"a", "b", "c", "d"}, rows);
  EXPECT_EQ(*DpLevelFinite(same, DatabaseShape{2, 2}), 0.0);
  rows[3] = {0.4, 0.3, 0.2, 0.1};
  FiniteMechanism different = *FiniteMechanism::Create(
      {"00", "01", "10", "11"}, {"a", "b", "c", "d"}, rows);
  EXPECT_GT(*DpLevelFinite(different, DatabaseShape{2, 2}), 0.0);
}

TEST(DpLevelFiniteTest, MatchesBruteForceOnRandomChannels) {
  std::mt19937_64 gen(31);
  std::exponential_distribution<double> expo(1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const DatabaseShape shape{2, 2};
    std::vector<std::vector<double>> rows(4, std::vector<double>(3));
    for (auto& r : rows) {
      double s = 0.0;
      for (double& v : r) s += (v = expo(gen));
      for (double& v : r) v /= s;
    }
    FiniteMechanism m = *FiniteMechanism::Create({"00", "01", "10", "11"},
                                                 {"a", "b", "c"}, rows);
    double want = 0.0;
    // Neighbors: pairs differing in one bit.
    const int pairs[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    for (const auto& p : pairs) {
      for (int y = 0; y < 3; ++y) {
        want =
            std::max(want, std::fabs(std::log(rows[p[0]][y] / rows[p[1]][y])));
      }
    }
    EXPECT_NEAR(*DpLevelFinite(m, shape), want, 1e-12);
  }
}

TEST(DpLevelLaplaceTest, Values) {
  EXPECT_NEAR(DpLevelLaplace(10.0, 1.0), 0.1, 1e-15);
  for (double eps : {0.1, 1.0, 2.0}) {
    const double n1 = 31.0;
    EXPECT_NEAR(DpLevelLaplace(1.0 / (eps * n1), 1.0 / n1), eps, 1e-14);
  }
  EXPECT_EQ(DpLevelLaplace(3.0, 0.0), 0.0);
}

TEST(LaplaceNeighborRatioTest, BoundedByLevel) {
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i) grid.push_back(-3.0 + 6.0 * i / 400.0);
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    for (std::size_t entries : {2u, 4u, 7u}) {
      const DatabaseShape shape{entries, 2};
      for (const Query& f :
           {Query::EmpiricalFrequency(entries), Query::Counting()}) {
        QueryLaplaceMechanism m = *LaplaceForQuery(f, shape, eps);
        const double level =
            DpLevelLaplace(m.scale(), *L1Sensitivity(f, shape));
        EXPECT_NEAR(level, eps, 1e-12);
        EXPECT_LE(*MaxNeighborLogDensityRatio(m, grid), level + 1e-12);
      }
    }
  }
}

TEST(LaplaceNeighborRatioTest, AttainedBetweenCenters) {
  // Outside the span of the centers the ratio equals delta / b exactly.
  const DatabaseShape shape{3, 2};
  QueryLaplaceMechanism m = *LaplaceForQuery(Query::Counting(), shape, 0.5);
  const std::vector<double> grid = {-1.0};
  EXPECT_NEAR(*MaxNeighborLogDensityRatio(m, grid), 0.5, 1e-12);
}

TEST(QueryLaplaceMechanismTest, MaterializeMatchesQuery) {
  const DatabaseShape shape{3, 2};
  QueryLaplaceMechanism m =
      *QueryLaplaceMechanism::Create(Query::EmpiricalFrequency(3), shape, 0.4);
  LaplaceMechanism explicit_m = *m.Materialize({"0", "1"});
  ASSERT_EQ(explicit_m.centers().size(), 8u);
  EXPECT_EQ(explicit_m.x_labels()[5], "101");
  EXPECT_NEAR(explicit_m.centers()[5], 2.0 / 3.0, 1e-15);
  EXPECT_FALSE(
      QueryLaplaceMechanism::Create(Query::Counting(), shape, 0.0).ok());
}

}  // namespace
}  // namespace pml

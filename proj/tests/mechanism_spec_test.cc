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

#include "pml/mechanism_spec.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "pml/random.h"

namespace pml {
namespace {

using ::testing::HasSubstr;

TEST(MechanismSpecTest, ParsesFinite) {
  MechanismSpec spec = *ParseMechanismSpec(R"({
    "kind": "finite", "x_labels": ["a", "b"], "y_labels": ["0", "1"],
    "matrix": [[0.9, 0.1], [0.2, 0.8]], "prior": [0.25, 0.75]})");
  EXPECT_EQ(spec.kind, MechanismKind::kFinite);
  BuiltMechanism built = *BuildMechanism(spec);
  ASSERT_TRUE(built.finite.has_value());
  EXPECT_NEAR(built.prior.prob(0), 0.25, 1e-15);
  EXPECT_EQ(built.shape.num_entries, 1u);
  EXPECT_EQ(built.shape.alphabet_size, 2u);
}

TEST(MechanismSpecTest, ParsesRandomizedResponseProduct) {
  BuiltMechanism built = *BuildMechanism(
      *ParseMechanismSpec(R"({"kind": "randomized_response", "p": 0.25,
                              "entries": 2})"));
  ASSERT_TRUE(built.finite.has_value());
  EXPECT_EQ(built.finite->num_inputs(), 4u);
  EXPECT_NEAR(built.prior.prob(3), 0.25, 1e-15);
}

TEST(MechanismSpecTest, ParsesLaplaceForms) {
  BuiltMechanism direct = *BuildMechanism(*ParseMechanismSpec(
      R"({"kind": "laplace", "centers": [0, 1], "scale": 10,
          "sensitivity": 1})"));
  ASSERT_TRUE(direct.laplace.has_value());
  EXPECT_EQ(direct.laplace->x_labels()[1], "1");
  EXPECT_EQ(*direct.sensitivity, 1.0);

  BuiltMechanism query = *BuildMechanism(*ParseMechanismSpec(
      R"({"kind": "laplace", "query": "counting", "entries": 3,
          "epsilon": 0.5})"));
  ASSERT_TRUE(query.laplace.has_value());
  EXPECT_NEAR(query.laplace->scale(), 2.0, 1e-15);
  EXPECT_EQ(query.laplace->centers().size(), 8u);
  EXPECT_EQ(*query.sensitivity, 1.0);
}

TEST(MechanismSpecTest, ErrorsNameTheField) {
  EXPECT_THAT(ParseMechanismSpec("{").status().message(), HasSubstr("spec"));
  EXPECT_THAT(ParseMechanismSpec(R"({"p": 0.1})").status().message(),
              HasSubstr("kind"));
  EXPECT_THAT(ParseMechanismSpec(R"({"kind": "gaussian"})").status().message(),
              HasSubstr("kind"));
  EXPECT_THAT(ParseMechanismSpec(R"({"kind": "finite", "x_labels": ["a"]})")
                  .status()
                  .message(),
              HasSubstr("y_labels"));
  absl::StatusOr<BuiltMechanism> faulty = BuildMechanism(*ParseMechanismSpec(
      R"({"kind": "finite", "x_labels": ["a", "b"], "y_labels": ["0", "1"],
          "matrix": [[0.5, 0.4], [0.5, 0.5]]})"));
  EXPECT_THAT(faulty.status().message(), HasSubstr("matrix"));
  absl::StatusOr<BuiltMechanism> prior = BuildMechanism(*ParseMechanismSpec(
      R"({"kind": "randomized_response", "p": 0.25, "prior": [0.5]})"));
  EXPECT_THAT(prior.status().message(), HasSubstr("prior"));
}

MechanismSpec RandomSpec(Rng& rng) {
  MechanismSpec spec;
  switch (rng.UniformIndex(4)) {
    case 0: {
      spec.kind = MechanismKind::kFinite;
      const std::size_t nx = 1 + rng.UniformIndex(5);
      const std::size_t ny = 1 + rng.UniformIndex(5);
      for (std::size_t i = 0; i < nx; ++i) {
        spec.x_labels.push_back("x" + std::to_string(i));
        spec.matrix.push_back(rng.SimplexPoint(ny));
      }
      for (std::size_t i = 0; i < ny; ++i) {
        spec.y_labels.push_back("y" + std::to_string(i));
      }
      if (rng.UniformIndex(2) == 0) spec.prior = rng.SimplexPoint(nx);
      if (rng.UniformIndex(2) == 0) spec.database = DatabaseShape{1, nx};
      break;
    }
    case 1:
      spec.kind = MechanismKind::kRandomizedResponse;
      spec.flip_probability = 0.5 * rng.Uniform01();
      spec.entries = 1 + rng.UniformIndex(3);
      break;
    case 2: {
      spec.kind = MechanismKind::kLaplace;
      const std::size_t k = 1 + rng.UniformIndex(5);
      for (std::size_t i = 0; i < k; ++i) {
        spec.centers.push_back(100.0 * rng.Uniform01() - 50.0);
      }
      spec.scale = 0.1 + rng.Uniform01();
      if (rng.UniformIndex(2) == 0) spec.sensitivity = rng.Uniform01();
      break;
    }
    default:
      spec.kind = MechanismKind::kLaplace;
      spec.query =
          rng.UniformIndex(2) == 0 ? "counting" : "empirical_frequency";
      spec.entries = 1 + rng.UniformIndex(4);
      spec.epsilon = 0.01 + rng.Uniform01();
      break;
  }
  return spec;
}

TEST(MechanismSpecTest, SerializeParseRoundTrip) {
  Rng rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const MechanismSpec spec = RandomSpec(rng);
    const std::string text = SerializeMechanismSpec(spec);
    absl::StatusOr<MechanismSpec> parsed = ParseMechanismSpec(text);
    ASSERT_TRUE(parsed.ok()) << parsed.status() << "\n" << text;
    EXPECT_EQ(*parsed, spec) << text;
    EXPECT_EQ(SerializeMechanismSpec(*parsed), text);
    EXPECT_TRUE(BuildMechanism(*parsed).ok()) << text;
  }
}

}  // namespace
}  // namespace pml

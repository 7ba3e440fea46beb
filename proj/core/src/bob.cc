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

#include "pml/bob.h"

#include <cmath>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace pml {

namespace {

std::vector<Label> AttributeLabels(std::size_t k) {
  std::vector<Label> labels;
  for (std::size_t j = 1; j <= k; ++j) labels.push_back(std::to_string(j));
  return labels;
}

}  // namespace

absl::StatusOr<BobModel> BobModel::Create(std::size_t k, double scale) {
  if (k == 0) return absl::InvalidArgumentError("k must be at least 1");
  return Create(k, scale, FiniteDistribution::Uniform(AttributeLabels(k)));
}

absl::StatusOr<BobModel> BobModel::Create(std::size_t k, double scale,
                                          FiniteDistribution prior) {
  if (k == 0) return absl::InvalidArgumentError("k must be at least 1");
  if (prior.size() != k) {
    return absl::InvalidArgumentError(
        absl::StrFormat("prior has %d atoms, expected %d", prior.size(), k));
  }
  if (!prior.full_support()) {
    return absl::InvalidArgumentError("prior must have full support");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError("scale must be positive");
  }
  return BobModel(scale, std::move(prior));
}

absl::StatusOr<LaplaceMechanism> BobModel::Mechanism(double epsilon) const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive, got %g", epsilon));
  }
  constexpr double kCountingSensitivity = 1.0;
  std::vector<double> centers;
  for (std::size_t j = 0; j < k(); ++j) centers.push_back(Center(j));
  return LaplaceMechanism::Create(prior_.labels(), std::move(centers),
                                  kCountingSensitivity / epsilon);
}

absl::StatusOr<LeakageReport> BobPml(const BobModel& model, double epsilon,
                                     double y) {
  absl::StatusOr<LaplaceMechanism> mechanism = model.Mechanism(epsilon);
  if (!mechanism.ok()) return mechanism.status();
  return Pml(model.prior(), *mechanism, y);
}

}  // namespace pml

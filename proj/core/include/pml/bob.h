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

#ifndef PML_BOB_H_
#define PML_BOB_H_

#include <cstddef>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/distribution.h"
#include "pml/leakage.h"
#include "pml/mechanisms.h"

namespace pml {

// A patient's attribute J in {1, ..., k} determines the number of cancer
// patients in the database, scale * J. A counting query (sensitivity 1) is
// answered with Laplace noise of scale 1 / epsilon.
class BobModel {
 public:
  static constexpr double kDefaultScale = 10'000.0;

  // Uniform prior over the k attribute values.
  static absl::StatusOr<BobModel> Create(std::size_t k,
                                         double scale = kDefaultScale);
  static absl::StatusOr<BobModel> Create(std::size_t k, double scale,
                                         FiniteDistribution prior);

  std::size_t k() const { return prior_.size(); }
  double scale() const { return scale_; }
  const FiniteDistribution& prior() const { return prior_; }
  // Query value for attribute index j (zero-based): scale * (j + 1).
  double Center(std::size_t j) const { return scale_ * double(j + 1); }

  absl::StatusOr<LaplaceMechanism> Mechanism(double epsilon) const;

 private:
  BobModel(double scale, FiniteDistribution prior)
      : scale_(scale), prior_(std::move(prior)) {}

  double scale_;
  FiniteDistribution prior_;
};

// l(J -> y) for the noisy count y.
absl::StatusOr<LeakageReport> BobPml(const BobModel& model, double epsilon,
                                     double y);

}  // namespace pml

#endif  // PML_BOB_H_

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

#include "pml/sweep.h"

#include <cmath>

#include "absl/status/status.h"
#include "pml/leakage.h"
#include "pml/oracle.h"

namespace pml {

absl::StatusOr<double> EnumeratedPmlFirstEntry(
    const CorrelatedBinaryModel& model, double epsilon, double y) {
  absl::StatusOr<ExplicitJointModel> joint = EnumerateJoint(model);
  if (!joint.ok()) return joint.status();
  absl::StatusOr<QueryLaplaceMechanism> mechanism =
      CalibratedMechanism(model, epsilon);
  if (!mechanism.ok()) return mechanism.status();
  absl::StatusOr<LaplaceMechanism> explicit_mechanism =
      mechanism->Materialize(model.alphabet());
  if (!explicit_mechanism.ok()) return explicit_mechanism.status();
  absl::StatusOr<LeakageReport> report =
      PmlEntry(*joint, *explicit_mechanism, 0, y);
  if (!report.ok()) return report.status();
  return report->pml;
}

absl::StatusOr<std::vector<SweepRow>> Sweep(const SweepConfig& config) {
  if (config.n_values.empty()) {
    return absl::InvalidArgumentError("empty n range");
  }
  std::vector<SweepRow> rows;
  rows.reserve(config.n_values.size());
  for (std::int64_t n : config.n_values) {
    absl::StatusOr<double> eta = config.eta.At(n);
    if (!eta.ok()) return eta.status();
    absl::StatusOr<CorrelatedBinaryModel> model =
        CorrelatedBinaryModel::Create(n, config.alpha, *eta);
    if (!model.ok()) return model.status();

    SweepRow row;
    row.n = n;
    row.eta = *eta;
    row.eps_max = -std::log(config.alpha);
    absl::StatusOr<double> bound =
        LowerBound(n, config.alpha, *eta, config.epsilon);
    if (!bound.ok()) return bound.status();
    row.lower_bound = *bound;
    absl::StatusOr<double> exact =
        PmlFirstEntry(*model, config.epsilon, config.y);
    if (!exact.ok()) return exact.status();
    row.exact_pml = *exact;
    if (n <= config.enumeration_limit) {
      absl::StatusOr<double> enumerated =
          EnumeratedPmlFirstEntry(*model, config.epsilon, config.y);
      if (!enumerated.ok()) return enumerated.status();
      row.enumerated_pml = *enumerated;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pml

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

#ifndef PML_SWEEP_H_
#define PML_SWEEP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/correlated_binary.h"

namespace pml {

struct SweepConfig {
  double alpha = 0.25;
  EtaSchedule eta = EtaSchedule::Constant(0.5);
  double epsilon = 0.1;
  double y = 0.0;
  std::vector<std::int64_t> n_values;
  // Rows with n at or below this limit also carry the full-enumeration
  // leakage as a cross-check.
  std::int64_t enumeration_limit = 15;
};

struct SweepRow {
  std::int64_t n = 0;
  double eta = 0.0;
  double lower_bound = 0.0;
  double exact_pml = 0.0;
  std::optional<double> enumerated_pml;
  double eps_max = 0.0;
};

// One row per n in config order. Exact leakage uses PmlFirstEntry; the
// enumerated column uses the explicit joint and the materialized mechanism.
absl::StatusOr<std::vector<SweepRow>> Sweep(const SweepConfig& config);

// Leakage of D_1 computed by enumerating all 2^{n+1} databases.
absl::StatusOr<double> EnumeratedPmlFirstEntry(
    const CorrelatedBinaryModel& model, double epsilon, double y);

}  // namespace pml

#endif  // PML_SWEEP_H_

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

#ifndef PML_LEAKAGE_H_
#define PML_LEAKAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/database_model.h"
#include "pml/distribution.h"
#include "pml/log_real.h"
#include "pml/mechanisms.h"

namespace pml {

// Slack allowed on the universal bound pml <= eps_max.
inline constexpr double kBoundSlack = 1e-9;

enum class LeakageContext { kWholeSecret, kEntry };

// Pointwise maximal leakage of one outcome, in nats.
struct LeakageReport {
  std::string outcome;
  double pml = 0.0;
  std::size_t argmax = 0;
  Label argmax_label;
  double eps_max = 0.0;
  bool upper_bound_satisfied = true;
  LeakageContext context = LeakageContext::kWholeSecret;
  std::size_t entry = 0;  // Meaningful for kEntry only.
};

// log(1 / min_x P_X(x)), the largest leakage any mechanism can cause.
absl::StatusOr<double> EpsMax(const FiniteDistribution& prior);

// PML from X to one outcome y given the column P_Y|X=x(y) (probabilities or
// densities, log domain):
//
//   l(X -> y) = log max_x P_Y|X=x(y) / P_Y(y),  P_Y(y) = sum_x P_Y|X=x(y)
//   P_X(x).
//
// Returns 0 when P_Y(y) = 0, where the posterior equals the prior. The prior
// must have full support. Ties in the argmax go to the lowest index.
absl::StatusOr<LeakageReport> PmlAt(const FiniteDistribution& prior,
                                    std::span<const LogReal> channel_at_y);

absl::StatusOr<LeakageReport> Pml(const FiniteDistribution& prior,
                                  const FiniteMechanism& mechanism,
                                  std::size_t y);
absl::StatusOr<LeakageReport> Pml(const FiniteDistribution& prior,
                                  const LaplaceMechanism& mechanism, double y);

// One report per outcome of a finite mechanism, in outcome order.
absl::StatusOr<std::vector<LeakageReport>> PmlProfile(
    const FiniteDistribution& prior, const FiniteMechanism& mechanism);
// One report per grid point, in grid order.
absl::StatusOr<std::vector<LeakageReport>> PmlProfile(
    const FiniteDistribution& prior, const LaplaceMechanism& mechanism,
    std::span<const double> y_grid);

// Induced entry channel P_Y|D_i=d(y) for every d, given the column
// P_Y|X=x(y) over all databases x in enumeration order:
//
//   P_Y|D_i=d(y) = sum_{x : x_i = d} P_Y|X=x(y) P_X(x) / P_{D_i}(d).
absl::StatusOr<std::vector<LogReal>> EntryChannel(
    const DatabaseModel& model, std::span<const LogReal> database_channel,
    std::size_t entry);

// l(D_i -> y) for mechanisms over D^n. The finite and materialized Laplace
// overloads enumerate the database space; the query overload mixes Laplace
// densities over the model's law of f(X) given D_i.
absl::StatusOr<LeakageReport> PmlEntry(const DatabaseModel& model,
                                       const FiniteMechanism& mechanism,
                                       std::size_t entry, std::size_t y);
absl::StatusOr<LeakageReport> PmlEntry(const DatabaseModel& model,
                                       const LaplaceMechanism& mechanism,
                                       std::size_t entry, double y);
absl::StatusOr<LeakageReport> PmlEntry(const DatabaseModel& model,
                                       const QueryLaplaceMechanism& mechanism,
                                       std::size_t entry, double y);

// log P_Y|D_i=d(y) of the query mechanism, via the model's query law.
absl::StatusOr<LogReal> EntryConditionalLogDensity(
    const DatabaseModel& model, const QueryLaplaceMechanism& mechanism,
    std::size_t entry, std::size_t symbol, double y);

// Density of a finite mixture of Laplace(atom.value, scale) with atom weights.
LogReal LaplaceMixtureLogDensity(std::span<const QueryAtom> atoms, double scale,
                                 double y);

struct DpEntryLeakageOptions {
  // Random full-support product priors, entries drawn uniformly from the
  // simplex.
  std::size_t prior_samples = 50;
  // Identical-entry grid priors. For binary alphabets the grid is
  // Bernoulli(k / (resolution + 1)), k = 1..resolution; for larger alphabets
  // every composition of resolution + |D| into positive parts.
  std::size_t grid_resolution = 99;
  std::uint64_t seed = 1;
};

struct DpEntryLeakageReport {
  double dp_level = 0.0;
  double epsilon = 0.0;
  double max_observed_pml = 0.0;
  double grid_max_pml = 0.0;
  double sample_max_pml = 0.0;
  // Witness of the largest observed leakage.
  std::vector<FiniteDistribution> witness_prior;
  std::size_t witness_entry = 0;
  std::size_t witness_outcome = 0;
  std::size_t priors_evaluated = 0;
  // max_observed_pml <= epsilon + kBoundSlack.
  bool pml_within_epsilon = false;
  bool mechanism_is_dp = false;
};

// Numerical check of the equivalence between epsilon-DP and bounding
// sup over product priors, outcomes and entries of l(D_i -> y) by epsilon. The
// supremum over the open set of full-support product priors is estimated by
// grid plus random search; the witness prior is reported.
absl::StatusOr<DpEntryLeakageReport> DpEntryLeakageCheck(
    const FiniteMechanism& mechanism, const DatabaseShape& shape,
    double epsilon, const DpEntryLeakageOptions& options);

}  // namespace pml

#endif  // PML_LEAKAGE_H_

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

// Brute-force validators that do not share code paths with the leakage
// formulas: the adversarial (gain function and randomized function) views of
// pointwise maximal leakage, and full enumeration of structured database
// models.

#ifndef PML_ORACLE_H_
#define PML_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/database_model.h"
#include "pml/distribution.h"
#include "pml/log_real.h"
#include "pml/mechanisms.h"

namespace pml {

// g(x, w) >= 0 over a finite secret alphabet and a finite guess set.
class GainFunction {
 public:
  // table[x][w]; all rows must have the same positive length.
  static absl::StatusOr<GainFunction> Create(
      std::vector<std::vector<double>> table);
  // g(x, w0) = 1[x = target] with a single guess w0.
  static GainFunction Indicator(std::size_t num_secrets, std::size_t target);

  std::size_t num_secrets() const { return table_.size(); }
  std::size_t num_guesses() const { return table_.front().size(); }
  double operator()(std::size_t x, std::size_t w) const { return table_[x][w]; }

 private:
  explicit GainFunction(std::vector<std::vector<double>> table)
      : table_(std::move(table)) {}

  std::vector<std::vector<double>> table_;
};

// Posterior P_X|Y=y from the prior and the column P_Y|X=x(y), computed in
// linear arithmetic after a max shift. Equals the prior when P_Y(y) = 0.
std::vector<double> PosteriorAt(const FiniteDistribution& prior,
                                std::span<const LogReal> channel_at_y);

// E[g(X, W) | Y = y] for a guessing kernel P_W|Y=y given as a distribution
// over guesses.
double PosteriorExpectedGain(std::span<const double> posterior,
                             const GainFunction& gain,
                             std::span<const double> kernel);

// log of sup over kernels of E[g(X, W) | Y = y] divided by
// max_w E[g(X, w)]. The supremum is attained by the deterministic guess
// maximizing the posterior expected gain. Fails with "degenerate gain" when
// the prior expected gain is zero for every guess.
absl::StatusOr<double> GainRatio(const FiniteDistribution& prior,
                                 std::span<const LogReal> channel_at_y,
                                 const GainFunction& gain);

// log[max_u P_U|Y=y(u) / max_u P_U(u)] for a randomized function U of X with
// kernel P_U|X (rows indexed like the prior).
absl::StatusOr<double> RandomizedFunctionRatio(
    const FiniteDistribution& prior, std::span<const LogReal> channel_at_y,
    const FiniteMechanism& kernel);

// Largest database space enumerate_joint will materialize (2^16 atoms).
inline constexpr std::uint64_t kEnumerationCutoff = std::uint64_t{1} << 16;

// The full joint table of a database model, one atom per database.
absl::StatusOr<ExplicitJointModel> EnumerateJoint(
    const DatabaseModel& model, std::uint64_t cutoff = kEnumerationCutoff);

struct OracleTrialConfig {
  std::uint64_t seed = 20240229;
  std::size_t achievability_trials = 1000;
  std::size_t gain_trials = 10000;
  std::size_t kernel_trials = 10000;
  std::size_t max_secret_size = 8;
  std::size_t max_guess_size = 6;
  double tolerance = 1e-12;
};

struct OracleTrialReport {
  std::uint64_t seed = 0;
  std::size_t trials_run = 0;
  // max |max_x indicator gain ratio - pml|.
  double max_achievability_error = 0.0;
  // max (ratio - pml); non-positive when sound.
  double max_gain_violation = -std::numeric_limits<double>::infinity();
  double max_kernel_violation = -std::numeric_limits<double>::infinity();
  bool passed = false;
};

// A fixed (prior, channel) pair to include alongside the random trials.
struct OracleCase {
  FiniteDistribution prior;
  FiniteMechanism mechanism;
};

// Runs indicator-gain achievability trials on random channels, then random
// gain functions and random kernels against the pml of random channels.
// Fails with "empty trial set" when every trial count is zero.
absl::StatusOr<OracleTrialReport> RunOracleTrials(
    const OracleTrialConfig& config,
    std::span<const OracleCase> fixed_cases = {});

}  // namespace pml

#endif  // PML_ORACLE_H_

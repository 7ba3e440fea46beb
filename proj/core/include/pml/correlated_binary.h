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

// A strongly correlated binary database on which the calibrated Laplace
// mechanism is epsilon-DP, yet the leakage about the first entry approaches
// the leakage of publishing that entry in the clear.
//
// The database has n + 1 binary entries (D_1, D_-) with D_- = (D_2, ...,
// D_{n+1}). In zero-based entry indices D_1 is entry 0. The first entry is
// Bernoulli with P(D_1 = 0) = alpha, and given D_1 = a the remaining n
// entries equal a^n with probability eta and are otherwise uniform over the
// other 2^n - 1 strings. The mechanism releases the empirical frequency of
// ones with Laplace noise of scale b; b = 1 / (epsilon (n + 1)) is
// epsilon-DP.

#ifndef PML_CORRELATED_BINARY_H_
#define PML_CORRELATED_BINARY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/database_model.h"
#include "pml/log_real.h"
#include "pml/mechanisms.h"

namespace pml {

class CorrelatedBinaryModel : public DatabaseModel {
 public:
  // `n` counts the correlated entries D_-; requires n >= 1,
  // 0 < alpha < 0.5 and 0 < eta < 1.
  static absl::StatusOr<CorrelatedBinaryModel> Create(std::int64_t n,
                                                      double alpha, double eta);

  std::int64_t n() const { return n_; }
  double alpha() const { return alpha_; }
  double eta() const { return eta_; }

  std::size_t num_entries() const override { return n_ + 1; }
  const std::vector<Label>& alphabet() const override;
  LogReal LogProbability(std::span<const std::size_t> database) const override;
  absl::StatusOr<FiniteDistribution> MarginalOfEntry(
      std::size_t entry) const override;
  // Weight-form queries are answered from Hamming-weight classes in O(n).
  absl::StatusOr<std::vector<QueryAtom>> QueryLawGivenEntry(
      std::size_t entry, std::size_t symbol, const Query& query) const override;

  // log P(D_1 = bit).
  LogReal LogPriorOfFirst(int bit) const;
  // log((1 - eta) / (2^n - 1)), the mass of each non-special string of D_-.
  double LogBackgroundMass() const { return log_background_; }

 private:
  CorrelatedBinaryModel(std::int64_t n, double alpha, double eta);

  std::int64_t n_;
  double alpha_;
  double eta_;
  double log_background_;
};

// eta(n) = c for constant schedules, c / n^r for polynomial ones.
class EtaSchedule {
 public:
  static EtaSchedule Constant(double eta) { return EtaSchedule(eta, 0.0); }
  // Requires c > 0 and r >= 1.
  static absl::StatusOr<EtaSchedule> Polynomial(double c, double r);

  bool is_constant() const { return exponent_ == 0.0; }
  double coefficient() const { return coefficient_; }
  double exponent() const { return exponent_; }

  // Fails when eta(n) falls outside (0, 1).
  absl::StatusOr<double> At(std::int64_t n) const;

 private:
  EtaSchedule(double c, double r) : coefficient_(c), exponent_(r) {}

  double coefficient_;
  double exponent_;
};

// b = 1 / (epsilon (n + 1)), the epsilon-DP scale for the empirical frequency.
double CalibratedScale(std::int64_t n, double epsilon);

// The calibrated Laplace mechanism on the empirical frequency of ones.
absl::StatusOr<QueryLaplaceMechanism> CalibratedMechanism(
    const CorrelatedBinaryModel& model, double epsilon);

// Closed-form log P_Y|D_1=d1(y), valid for y <= 0. With t = 1/(b(n+1)):
//
//   d1 = 0: e^{y/b} [2^n eta - 1 + (1 - eta)(1 + e^{-t})^n] / (2b(2^n - 1))
//   d1 = 1: e^{y/b} [(2^n eta - 1) e^{-1/b}
//                    + (1 - eta) e^{-t} (1 + e^{-t})^n] / (2b(2^n - 1))
//
// The factor 2^n eta - 1 may be negative and is carried as a signed log.
absl::StatusOr<LogReal> CondDensityClosedForm(
    const CorrelatedBinaryModel& model, double scale, int d1, double y);

// log P_Y|D_1=d1(y) for any real y, as the Laplace mixture over the Hamming
// weight of D_- with log-gamma binomial weights.
LogReal CondDensityBinomial(const CorrelatedBinaryModel& model, double scale,
                            int d1, double y);

// log P_Y(y) = log[(1 - alpha) P_Y|D_1=1(y) + alpha P_Y|D_1=0(y)]. Uses the
// closed form for y <= 0 and the binomial mixture otherwise.
LogReal MarginalDensity(const CorrelatedBinaryModel& model, double scale,
                        double y);

// Exact l(D_1 -> y) under the calibrated mechanism. For y <= 0 the d1 = 0
// branch dominates and the closed forms are used; for y > 0 both branches
// are evaluated with the binomial mixture and the larger is taken.
absl::StatusOr<double> PmlFirstEntry(const CorrelatedBinaryModel& model,
                                     double epsilon, double y);

// Lower bound on l(D_1 -> y), y <= 0, under the calibrated mechanism:
//
//   log [2^n eta + (1 + e^-eps)^n (1 - eta) - 1]
//     - log [2^n eta alpha + (2 e^-eps)^n eta e^-eps (1 - alpha)
//            + (1 + e^-eps)^n (1 - eta)]
//
// evaluated in the log domain. Returns -inf when the numerator is not
// positive (vacuous bound).
absl::StatusOr<double> LowerBound(std::int64_t n, double alpha, double eta,
                                  double epsilon);

struct ThresholdResult {
  std::int64_t n = 0;
  double eta = 0.0;
  double lower_bound = 0.0;
  double gap = 0.0;  // log(1/alpha) - lower_bound.
};

// Smallest n in {1, 2, 4, ...} <= max_n with log(1/alpha) - bound(n) < delta.
// Powers of two where the schedule leaves (0, 1) are skipped. NotFound when
// the search exhausts max_n.
absl::StatusOr<ThresholdResult> FindThresholdByDoubling(
    double alpha, const EtaSchedule& eta, double epsilon, double delta,
    std::int64_t max_n = 1'000'000);

}  // namespace pml

#endif  // PML_CORRELATED_BINARY_H_

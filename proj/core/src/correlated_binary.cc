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

#include "pml/correlated_binary.h"

#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pml/leakage.h"

namespace pml {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLog2 = std::log(2.0);

absl::Status ValidateParameters(std::int64_t n, double alpha, double eta) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("n must be at least 1, got %d", n));
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("alpha must lie in (0, 0.5), got %g", alpha));
  }
  if (!(eta > 0.0 && eta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eta must lie in (0, 1), got %g", eta));
  }
  return absl::OkStatus();
}

}  // namespace

CorrelatedBinaryModel::CorrelatedBinaryModel(std::int64_t n, double alpha,
                                             double eta)
    : n_(n),
      alpha_(alpha),
      eta_(eta),
      log_background_(std::log1p(-eta) - LogTwoPowMinusOne(double(n))) {}

absl::StatusOr<CorrelatedBinaryModel> CorrelatedBinaryModel::Create(
    std::int64_t n, double alpha, double eta) {
  if (absl::Status s = ValidateParameters(n, alpha, eta); !s.ok()) return s;
  return CorrelatedBinaryModel(n, alpha, eta);
}

const std::vector<Label>& CorrelatedBinaryModel::alphabet() const {
  static const std::vector<Label>* const kBinary =
      new std::vector<Label>{"0", "1"};
  return *kBinary;
}

LogReal CorrelatedBinaryModel::LogPriorOfFirst(int bit) const {
  return LogReal::FromLog(bit == 0 ? std::log(alpha_) : std::log1p(-alpha_));
}

LogReal CorrelatedBinaryModel::LogProbability(
    std::span<const std::size_t> database) const {
  const std::size_t first = database[0];
  bool special = true;
  for (std::size_t j = 1; j < database.size(); ++j) {
    if (database[j] != first) {
      special = false;
      break;
    }
  }
  return LogPriorOfFirst(static_cast<int>(first)) *
         LogReal::FromLog(special ? std::log(eta_) : log_background_);
}

absl::StatusOr<FiniteDistribution> CorrelatedBinaryModel::MarginalOfEntry(
    std::size_t entry) const {
  if (absl::Status s = CheckEntry(entry); !s.ok()) return s;
  if (entry == 0) {
    return FiniteDistribution::FromLogProbabilities(
        alphabet(), {LogPriorOfFirst(0), LogPriorOfFirst(1)});
  }
  // P(D_j = d) = sum_a P(D_1 = a) [eta 1{a = d} + c (2^{n-1} - 1{a = d})].
  std::vector<LogReal> log_p(2);
  for (int d = 0; d < 2; ++d) {
    for (int a = 0; a < 2; ++a) {
      LogReal given_a;
      if (a == d) {
        const double log_count =
            n_ == 1 ? kNegInf : LogTwoPowMinusOne(double(n_ - 1));
        given_a = LogReal::FromLog(std::log(eta_)) +
                  LogReal::FromLog(log_background_ + log_count);
      } else {
        given_a = LogReal::FromLog(log_background_ + double(n_ - 1) * kLog2);
      }
      log_p[d] += LogPriorOfFirst(a) * given_a;
    }
  }
  return FiniteDistribution::FromLogWeights(alphabet(), std::move(log_p));
}

absl::StatusOr<std::vector<QueryAtom>>
CorrelatedBinaryModel::QueryLawGivenEntry(std::size_t entry, std::size_t symbol,
                                          const Query& query) const {
  if (!query.weight_form().has_value() || query.weight_form()->symbol > 1) {
    return DatabaseModel::QueryLawGivenEntry(entry, symbol, query);
  }
  if (absl::Status s = CheckEntry(entry); !s.ok()) return s;
  if (absl::Status s = CheckSymbol(symbol); !s.ok()) return s;
  const WeightForm& form = *query.weight_form();
  const std::int64_t total_entries = n_ + 1;
  auto value_of_weight = [&](std::int64_t ones) {
    const std::int64_t count = form.symbol == 1 ? ones : total_entries - ones;
    return form.At(static_cast<double>(count));
  };
  const double log_eta = std::log(eta_);
  const int d = static_cast<int>(symbol);

  std::vector<QueryAtom> atoms;
  if (entry == 0) {
    // Hamming weight w of D_- given D_1 = d.
    for (std::int64_t w = 0; w <= n_; ++w) {
      const double log_w =
          w == n_ * d ? log_eta : log_background_ + LogBinomial(n_, w);
      atoms.push_back({value_of_weight(d + w), LogReal::FromLog(log_w)});
    }
    return MergeQueryAtoms(std::move(atoms));
  }
  // Joint of (D_1 = a, |D_-| = w) restricted to D_j = d, j >= 1.
  for (int a = 0; a < 2; ++a) {
    for (std::int64_t w = 0; w <= n_; ++w) {
      double log_w;
      if (a == d && w == n_ * a) {
        log_w = log_eta;
      } else {
        log_w = log_background_ + LogBinomial(n_ - 1, w - d);
      }
      if (std::isinf(log_w)) continue;
      atoms.push_back({value_of_weight(a + w),
                       LogPriorOfFirst(a) * LogReal::FromLog(log_w)});
    }
  }
  atoms = MergeQueryAtoms(std::move(atoms));
  std::vector<double> logs;
  for (const QueryAtom& atom : atoms) logs.push_back(atom.log_prob.log());
  const LogReal total = LogReal::FromLog(*LogSumExp(logs));
  for (QueryAtom& atom : atoms) atom.log_prob /= total;
  return atoms;
}

absl::StatusOr<EtaSchedule> EtaSchedule::Polynomial(double c, double r) {
  if (!(c > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eta coefficient must be positive, got %g", c));
  }
  if (!(r >= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eta exponent must be at least 1, got %g", r));
  }
  return EtaSchedule(c, r);
}

absl::StatusOr<double> EtaSchedule::At(std::int64_t n) const {
  const double eta =
      is_constant()
          ? coefficient_
          : coefficient_ / std::pow(static_cast<double>(n), exponent_);
  if (!(eta > 0.0 && eta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eta(%d) = %g outside (0, 1)", n, eta));
  }
  return eta;
}

double CalibratedScale(std::int64_t n, double epsilon) {
  return 1.0 / (epsilon * static_cast<double>(n + 1));
}

absl::StatusOr<QueryLaplaceMechanism> CalibratedMechanism(
    const CorrelatedBinaryModel& model, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive, got %g", epsilon));
  }
  return QueryLaplaceMechanism::Create(
      Query::EmpiricalFrequency(model.num_entries()), model.shape(),
      CalibratedScale(model.n(), epsilon));
}

absl::StatusOr<LogReal> CondDensityClosedForm(
    const CorrelatedBinaryModel& model, double scale, int d1, double y) {
  if (y > 0.0) {
    return absl::InvalidArgumentError("closed form valid only for y <= 0");
  }
  if (!(scale > 0.0)) {
    return absl::InvalidArgumentError("scale must be positive");
  }
  if (d1 != 0 && d1 != 1)
    return absl::InvalidArgumentError("d1 must be 0 or 1");
  const double n = static_cast<double>(model.n());
  const double eta = model.eta();
  const double t = 1.0 / (scale * (n + 1.0));

  // 2^n eta - 1, possibly negative for small n.
  const SignedLogReal special =
      SignedLogReal::FromLog(n * kLog2 + std::log(eta)) -
      SignedLogReal::FromLog(0.0);
  const double log_spread = std::log1p(-eta) + n * std::log1p(std::exp(-t));

  SignedLogReal bracket;
  if (d1 == 0) {
    bracket = special + SignedLogReal::FromLog(log_spread);
  } else {
    bracket = special * SignedLogReal::FromLog(-1.0 / scale) +
              SignedLogReal::FromLog(log_spread - t);
  }
  if (!bracket.IsPositive()) {
    return absl::InternalError("closed-form density is not positive");
  }
  const double log_prefactor =
      -std::log(2.0 * scale) - LogTwoPowMinusOne(n) + y / scale;
  return LogReal::FromLog(log_prefactor + bracket.log_abs());
}

LogReal CondDensityBinomial(const CorrelatedBinaryModel& model, double scale,
                            int d1, double y) {
  const std::vector<QueryAtom> law =
      *model.QueryLawGivenEntry(0, static_cast<std::size_t>(d1),
                                Query::EmpiricalFrequency(model.num_entries()));
  return LaplaceMixtureLogDensity(law, scale, y);
}

namespace {

std::pair<LogReal, LogReal> BranchDensities(const CorrelatedBinaryModel& model,
                                            double scale, double y) {
  if (y <= 0.0) {
    return {*CondDensityClosedForm(model, scale, 0, y),
            *CondDensityClosedForm(model, scale, 1, y)};
  }
  return {CondDensityBinomial(model, scale, 0, y),
          CondDensityBinomial(model, scale, 1, y)};
}

}  // namespace

LogReal MarginalDensity(const CorrelatedBinaryModel& model, double scale,
                        double y) {
  const auto [zero, one] = BranchDensities(model, scale, y);
  return model.LogPriorOfFirst(1) * one + model.LogPriorOfFirst(0) * zero;
}

absl::StatusOr<double> PmlFirstEntry(const CorrelatedBinaryModel& model,
                                     double epsilon, double y) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive, got %g", epsilon));
  }
  const double scale = CalibratedScale(model.n(), epsilon);
  const auto [zero, one] = BranchDensities(model, scale, y);
  // For y <= 0 the D_1 = 0 branch dominates.
  const int best = (y <= 0.0 || zero >= one) ? 0 : 1;
  const LogReal top = best == 0 ? zero : one;
  const LogReal other = best == 0 ? one : zero;
  if (std::isinf(top.log()) && top.log() < 0) return 0.0;
  const double terms[] = {
      model.LogPriorOfFirst(best).log(),
      model.LogPriorOfFirst(1 - best).log() + (other.log() - top.log()),
  };
  return std::max(0.0, -*LogSumExp(terms));
}

absl::StatusOr<double> LowerBound(std::int64_t n, double alpha, double eta,
                                  double epsilon) {
  if (absl::Status s = ValidateParameters(n, alpha, eta); !s.ok()) return s;
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive, got %g", epsilon));
  }
  // Both sides are divided by 2^n so no term grows with n.
  const double nd = static_cast<double>(n);
  const double log_half_spread = nd * (std::log1p(std::exp(-epsilon)) - kLog2);
  const double log_spread = log_half_spread + std::log1p(-eta);

  const SignedLogReal numerator = SignedLogReal::FromLog(std::log(eta)) +
                                  SignedLogReal::FromLog(log_spread) -
                                  SignedLogReal::FromLog(-nd * kLog2);
  if (!numerator.IsPositive()) return kNegInf;

  const double denominator_terms[] = {
      std::log(eta) + std::log(alpha),
      -nd * epsilon + std::log(eta) - epsilon + std::log1p(-alpha),
      log_spread,
  };
  return numerator.log_abs() - *LogSumExp(denominator_terms);
}

absl::StatusOr<ThresholdResult> FindThresholdByDoubling(double alpha,
                                                        const EtaSchedule& eta,
                                                        double epsilon,
                                                        double delta,
                                                        std::int64_t max_n) {
  if (!(delta > 0.0)) {
    return absl::InvalidArgumentError("delta must be positive");
  }
  const double eps_max = -std::log(alpha);
  for (std::int64_t n = 1; n <= max_n; n *= 2) {
    absl::StatusOr<double> eta_n = eta.At(n);
    if (!eta_n.ok()) continue;
    absl::StatusOr<double> bound = LowerBound(n, alpha, *eta_n, epsilon);
    if (!bound.ok()) return bound.status();
    if (eps_max - *bound < delta) {
      return ThresholdResult{n, *eta_n, *bound, eps_max - *bound};
    }
  }
  return absl::NotFoundError(
      absl::StrFormat("no n <= %d closes the gap below %g", max_n, delta));
}

}  // namespace pml

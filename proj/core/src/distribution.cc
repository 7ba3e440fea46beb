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

#include "pml/distribution.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace pml {

FiniteDistribution::FiniteDistribution(std::vector<Label> labels,
                                       std::vector<LogReal> log_p)
    : labels_(std::move(labels)), log_p_(std::move(log_p)) {
  full_support_ = true;
  for (LogReal v : log_p_) {
    if (!v.IsFinite()) full_support_ = false;
  }
}

absl::StatusOr<FiniteDistribution> FiniteDistribution::FromProbabilities(
    std::vector<Label> labels, std::span<const double> probabilities,
    double tolerance) {
  if (labels.size() != probabilities.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%d labels but %d probabilities", labels.size(), probabilities.size()));
  }
  std::vector<LogReal> log_p;
  log_p.reserve(probabilities.size());
  for (double p : probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("invalid probability %g", p));
    }
    log_p.push_back(LogReal::FromLinear(p));
  }
  return FromLogProbabilities(std::move(labels), std::move(log_p), tolerance);
}

absl::StatusOr<FiniteDistribution> FiniteDistribution::FromLogProbabilities(
    std::vector<Label> labels, std::vector<LogReal> log_probabilities,
    double tolerance) {
  if (labels.empty()) {
    return absl::InvalidArgumentError("empty alphabet");
  }
  if (labels.size() != log_probabilities.size()) {
    return absl::InvalidArgumentError("label/probability size mismatch");
  }
  for (LogReal v : log_probabilities) {
    if (std::isnan(v.log()) || v.log() > 0.0 + tolerance) {
      return absl::InvalidArgumentError(
          absl::StrFormat("invalid log probability %g", v.log()));
    }
  }
  absl::StatusOr<LogReal> total = LogSumExp(log_probabilities);
  if (!total.ok()) return total.status();
  // Compare mass, not log mass, against the absolute tolerance.
  if (std::abs(std::expm1(total->log())) > tolerance) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "probabilities sum to %.12g, not 1", std::exp(total->log())));
  }
  for (LogReal& v : log_probabilities) v /= *total;
  return FiniteDistribution(std::move(labels), std::move(log_probabilities));
}

absl::StatusOr<FiniteDistribution> FiniteDistribution::FromLogWeights(
    std::vector<Label> labels, std::vector<LogReal> log_weights) {
  if (labels.size() != log_weights.size() || labels.empty()) {
    return absl::InvalidArgumentError("label/weight size mismatch");
  }
  absl::StatusOr<LogReal> total = LogSumExp(log_weights);
  if (!total.ok()) return total.status();
  if (total->IsZero() || !total->IsFinite()) {
    return absl::InvalidArgumentError("weights cannot be normalized");
  }
  for (LogReal& v : log_weights) v /= *total;
  return FiniteDistribution(std::move(labels), std::move(log_weights));
}

FiniteDistribution FiniteDistribution::Uniform(std::vector<Label> labels) {
  const LogReal p = LogReal::FromLog(-std::log(double(labels.size())));
  std::vector<LogReal> log_p(labels.size(), p);
  return FiniteDistribution(std::move(labels), std::move(log_p));
}

std::optional<std::size_t> FiniteDistribution::IndexOf(
    const Label& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<double> FiniteDistribution::Probabilities() const {
  std::vector<double> p;
  p.reserve(log_p_.size());
  for (LogReal v : log_p_) p.push_back(v.ToLinear());
  return p;
}

std::size_t FiniteDistribution::ArgMin() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < log_p_.size(); ++i) {
    if (log_p_[i] < log_p_[best]) best = i;
  }
  return best;
}

absl::StatusOr<JointFinite> JointFinite::FromChannel(
    const FiniteDistribution& prior, std::vector<Label> y_labels,
    const std::vector<std::vector<LogReal>>& channel_rows, double tolerance) {
  if (channel_rows.size() != prior.size()) {
    return absl::InvalidArgumentError("channel rows do not match prior");
  }
  std::vector<LogReal> log_p;
  log_p.reserve(prior.size() * y_labels.size());
  for (std::size_t x = 0; x < prior.size(); ++x) {
    const auto& row = channel_rows[x];
    if (row.size() != y_labels.size()) {
      return absl::InvalidArgumentError("channel row has wrong length");
    }
    absl::StatusOr<LogReal> row_mass = LogSumExp(row);
    if (!row_mass.ok()) return row_mass.status();
    if (std::abs(std::expm1(row_mass->log())) > tolerance) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "channel row %d sums to %.12g", x, row_mass->ToLinear()));
    }
    for (LogReal v : row) log_p.push_back(v * prior.log_prob(x));
  }
  return JointFinite(prior.labels(), std::move(y_labels), std::move(log_p));
}

FiniteDistribution JointFinite::XMarginal() const {
  const std::size_t ny = y_labels_.size();
  std::vector<LogReal> m(x_labels_.size());
  for (std::size_t x = 0; x < x_labels_.size(); ++x) {
    m[x] = *LogSumExp(std::span(log_p_).subspan(x * ny, ny));
  }
  return *FiniteDistribution::FromLogWeights(x_labels_, std::move(m));
}

FiniteDistribution JointFinite::YMarginal() const {
  const std::size_t ny = y_labels_.size();
  std::vector<LogReal> m(ny);
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t x = 0; x < x_labels_.size(); ++x) {
      m[y] += log_prob(x, y);
    }
  }
  return *FiniteDistribution::FromLogWeights(y_labels_, std::move(m));
}

FiniteDistribution JointFinite::Posterior(std::size_t y) const {
  std::vector<LogReal> column(x_labels_.size());
  for (std::size_t x = 0; x < x_labels_.size(); ++x) column[x] = log_prob(x, y);
  absl::StatusOr<FiniteDistribution> posterior =
      FiniteDistribution::FromLogWeights(x_labels_, std::move(column));
  if (!posterior.ok()) return XMarginal();
  return *std::move(posterior);
}

}  // namespace pml

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

#ifndef PML_DISTRIBUTION_H_
#define PML_DISTRIBUTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/log_real.h"

namespace pml {

using Label = std::string;

// Absolute tolerance on total mass used when validating distributions.
inline constexpr double kDefaultMassTolerance = 1e-9;

// A probability mass function over an ordered, labeled finite alphabet,
// stored in the log domain. Immutable after construction.
class FiniteDistribution {
 public:
  // Validates that the masses are non-negative and sum to one within
  // `tolerance`. The stored masses are renormalized exactly.
  static absl::StatusOr<FiniteDistribution> FromProbabilities(
      std::vector<Label> labels, std::span<const double> probabilities,
      double tolerance = kDefaultMassTolerance);
  static absl::StatusOr<FiniteDistribution> FromLogProbabilities(
      std::vector<Label> labels, std::vector<LogReal> log_probabilities,
      double tolerance = kDefaultMassTolerance);
  // Normalizes arbitrary non-negative log weights; fails if all are zero.
  static absl::StatusOr<FiniteDistribution> FromLogWeights(
      std::vector<Label> labels, std::vector<LogReal> log_weights);
  static FiniteDistribution Uniform(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> IndexOf(const Label& label) const;

  LogReal log_prob(std::size_t i) const { return log_p_[i]; }
  double prob(std::size_t i) const { return log_p_[i].ToLinear(); }
  std::span<const LogReal> log_probs() const { return log_p_; }
  std::vector<double> Probabilities() const;

  // True when every atom has strictly positive mass.
  bool full_support() const { return full_support_; }

  // Index of the smallest atom; ties go to the lowest index.
  std::size_t ArgMin() const;

 private:
  FiniteDistribution(std::vector<Label> labels, std::vector<LogReal> log_p);

  std::vector<Label> labels_;
  std::vector<LogReal> log_p_;
  bool full_support_ = false;
};

// Joint law of (X, Y) over finite alphabets, P_XY(x, y) = P_Y|X=x(y) P_X(x).
class JointFinite {
 public:
  // `channel_rows[x][y]` holds log P_Y|X=x(y); each row must sum to one.
  static absl::StatusOr<JointFinite> FromChannel(
      const FiniteDistribution& prior, std::vector<Label> y_labels,
      const std::vector<std::vector<LogReal>>& channel_rows,
      double tolerance = kDefaultMassTolerance);

  const std::vector<Label>& x_labels() const { return x_labels_; }
  const std::vector<Label>& y_labels() const { return y_labels_; }
  LogReal log_prob(std::size_t x, std::size_t y) const {
    return log_p_[x * y_labels_.size() + y];
  }

  FiniteDistribution XMarginal() const;
  FiniteDistribution YMarginal() const;
  // P_X|Y=y; by convention equals the X marginal when P_Y(y) = 0.
  FiniteDistribution Posterior(std::size_t y) const;

 private:
  JointFinite(std::vector<Label> x_labels, std::vector<Label> y_labels,
              std::vector<LogReal> log_p)
      : x_labels_(std::move(x_labels)),
        y_labels_(std::move(y_labels)),
        log_p_(std::move(log_p)) {}

  std::vector<Label> x_labels_;
  std::vector<Label> y_labels_;
  std::vector<LogReal> log_p_;  // Row-major |X| x |Y|.
};

}  // namespace pml

#endif  // PML_DISTRIBUTION_H_

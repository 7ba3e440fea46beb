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

#ifndef PML_MECHANISMS_H_
#define PML_MECHANISMS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/distribution.h"
#include "pml/log_real.h"
#include "pml/query.h"

namespace pml {

// A channel P_Y|X with finite input and output alphabets. Row x holds
// log P_Y|X=x(y).
class FiniteMechanism {
 public:
  static absl::StatusOr<FiniteMechanism> Create(
      std::vector<Label> x_labels, std::vector<Label> y_labels,
      const std::vector<std::vector<double>>& matrix,
      double tolerance = kDefaultMassTolerance);
  static absl::StatusOr<FiniteMechanism> FromLogRows(
      std::vector<Label> x_labels, std::vector<Label> y_labels,
      std::vector<std::vector<LogReal>> rows,
      double tolerance = kDefaultMassTolerance);

  std::size_t num_inputs() const { return x_labels_.size(); }
  std::size_t num_outputs() const { return y_labels_.size(); }
  const std::vector<Label>& x_labels() const { return x_labels_; }
  const std::vector<Label>& y_labels() const { return y_labels_; }
  LogReal log_prob(std::size_t x, std::size_t y) const { return rows_[x][y]; }
  const std::vector<std::vector<LogReal>>& rows() const { return rows_; }
  std::vector<std::vector<double>> Matrix() const;

  // Column y: P_Y|X=x(y) for every x.
  std::vector<LogReal> ChannelAt(std::size_t y) const;

 private:
  FiniteMechanism(std::vector<Label> x_labels, std::vector<Label> y_labels,
                  std::vector<std::vector<LogReal>> rows)
      : x_labels_(std::move(x_labels)),
        y_labels_(std::move(y_labels)),
        rows_(std::move(rows)) {}

  std::vector<Label> x_labels_;
  std::vector<Label> y_labels_;
  std::vector<std::vector<LogReal>> rows_;
};

// Binary randomized response: report the true bit with probability 1 - p.
// Requires 0 <= p <= 1/2.
absl::StatusOr<FiniteMechanism> RandomizedResponse(double flip_probability);

// The mechanism that releases its input unchanged.
FiniteMechanism IdentityMechanism(std::vector<Label> labels);

// Applies `per_entry` independently to each of `num_entries` entries. Inputs
// and outputs are indexed by database enumeration order.
absl::StatusOr<FiniteMechanism> ProductMechanism(
    const FiniteMechanism& per_entry, std::size_t num_entries);

// log of the Lap(center, scale) density at y.
LogReal LaplaceLogDensity(double center, double scale, double y);

// The Laplace mechanism over a finite secret: Y | X=x ~ Lap(center[x], b).
class LaplaceMechanism {
 public:
  static absl::StatusOr<LaplaceMechanism> Create(std::vector<Label> x_labels,
                                                 std::vector<double> centers,
                                                 double scale);

  const std::vector<Label>& x_labels() const { return x_labels_; }
  const std::vector<double>& centers() const { return centers_; }
  double scale() const { return scale_; }

  LogReal LogDensity(std::size_t x, double y) const {
    return LaplaceLogDensity(centers_[x], scale_, y);
  }
  std::vector<LogReal> ChannelAt(double y) const;

 private:
  LaplaceMechanism(std::vector<Label> x_labels, std::vector<double> centers,
                   double scale)
      : x_labels_(std::move(x_labels)),
        centers_(std::move(centers)),
        scale_(scale) {}

  std::vector<Label> x_labels_;
  std::vector<double> centers_;
  double scale_;
};

// The Laplace mechanism answering a query over D^n without materializing the
// database space: Y | X=x ~ Lap(f(x), b).
class QueryLaplaceMechanism {
 public:
  static absl::StatusOr<QueryLaplaceMechanism> Create(Query query,
                                                      DatabaseShape shape,
                                                      double scale);

  const Query& query() const { return query_; }
  const DatabaseShape& shape() const { return shape_; }
  double scale() const { return scale_; }

  LogReal LogDensity(std::span<const std::size_t> database, double y) const {
    return LaplaceLogDensity(query_(database), scale_, y);
  }

  // Evaluates f on every database once; the result caches the query values
  // as centers. Labels follow DatabaseLabels(n, alphabet).
  absl::StatusOr<LaplaceMechanism> Materialize(
      const std::vector<Label>& alphabet) const;

 private:
  QueryLaplaceMechanism(Query query, DatabaseShape shape, double scale)
      : query_(std::move(query)), shape_(shape), scale_(scale) {}

  Query query_;
  DatabaseShape shape_;
  double scale_;
};

// sup over neighboring x ~ x' of |f(x) - f(x')|. Enumerates D^n when it is
// within kMaxExplicitDatabases, otherwise falls back to the query's analytic
// sensitivity.
absl::StatusOr<double> L1Sensitivity(const Query& query,
                                     const DatabaseShape& shape);

// Calibrates b = sensitivity / epsilon. Fails for epsilon <= 0 and for
// queries with zero sensitivity.
absl::StatusOr<QueryLaplaceMechanism> LaplaceForQuery(
    const Query& query, const DatabaseShape& shape, double epsilon);

// Smallest epsilon with log P(y|x) - log P(y|x') <= epsilon for all
// neighboring databases x ~ x' and all outcomes y; +inf when some outcome is
// possible under x but impossible under a neighbor. For a finite outcome
// space the per-outcome check is equivalent to the event-wise definition.
// Rows must be indexed by the enumeration of D^n for the given shape.
absl::StatusOr<double> DpLevelFinite(const FiniteMechanism& mechanism,
                                     const DatabaseShape& shape);

// Delta / b, the tight level of the Laplace mechanism.
double DpLevelLaplace(double scale, double sensitivity);

// Largest log-density ratio between neighboring databases over `y_grid`.
// Uses weight classes for weight-form queries and enumeration otherwise.
absl::StatusOr<double> MaxNeighborLogDensityRatio(
    const QueryLaplaceMechanism& mechanism, std::span<const double> y_grid);

}  // namespace pml

#endif  // PML_MECHANISMS_H_

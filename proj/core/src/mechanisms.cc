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

#include "pml/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pml/database_model.h"

namespace pml {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

absl::StatusOr<FiniteMechanism> FiniteMechanism::Create(
    std::vector<Label> x_labels, std::vector<Label> y_labels,
    const std::vector<std::vector<double>>& matrix, double tolerance) {
  std::vector<std::vector<LogReal>> rows;
  rows.reserve(matrix.size());
  for (const auto& row : matrix) {
    std::vector<LogReal> log_row;
    for (double p : row) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        return absl::InvalidArgumentError(
            absl::StrFormat("invalid channel entry %g", p));
      }
      log_row.push_back(LogReal::FromLinear(p));
    }
    rows.push_back(std::move(log_row));
  }
  return FromLogRows(std::move(x_labels), std::move(y_labels), std::move(rows),
                     tolerance);
}

absl::StatusOr<FiniteMechanism> FiniteMechanism::FromLogRows(
    std::vector<Label> x_labels, std::vector<Label> y_labels,
    std::vector<std::vector<LogReal>> rows, double tolerance) {
  if (x_labels.empty() || y_labels.empty()) {
    return absl::InvalidArgumentError("mechanism alphabets must be non-empty");
  }
  if (rows.size() != x_labels.size()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%d rows for %d inputs", rows.size(), x_labels.size()));
  }
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != y_labels.size()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("row %d has %d entries, expected %d", x,
                          rows[x].size(), y_labels.size()));
    }
    const double mass = std::exp(LogSumExp(rows[x])->log());
    if (std::abs(mass - 1.0) > tolerance) {
      return absl::InvalidArgumentError(
          absl::StrFormat("row %d sums to %.12g, not 1", x, mass));
    }
  }
  return FiniteMechanism(std::move(x_labels), std::move(y_labels),
                         std::move(rows));
}

std::vector<std::vector<double>> FiniteMechanism::Matrix() const {
  std::vector<std::vector<double>> m;
  for (const auto& row : rows_) {
    std::vector<double> r;
    for (LogReal v : row) r.push_back(v.ToLinear());
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<LogReal> FiniteMechanism::ChannelAt(std::size_t y) const {
  std::vector<LogReal> column;
  column.reserve(rows_.size());
  for (const auto& row : rows_) column.push_back(row[y]);
  return column;
}

absl::StatusOr<FiniteMechanism> RandomizedResponse(double flip_probability) {
  if (!(flip_probability >= 0.0 && flip_probability <= 0.5)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "flip probability %g outside [0, 1/2]", flip_probability));
  }
  const double p = flip_probability;
  return FiniteMechanism::Create({"0", "1"}, {"0", "1"},
                                 {{1.0 - p, p}, {p, 1.0 - p}});
}

FiniteMechanism IdentityMechanism(std::vector<Label> labels) {
  std::vector<std::vector<double>> m(labels.size(),
                                     std::vector<double>(labels.size(), 0.0));
  for (std::size_t i = 0; i < labels.size(); ++i) m[i][i] = 1.0;
  return *FiniteMechanism::Create(labels, labels, m);
}

absl::StatusOr<FiniteMechanism> ProductMechanism(
    const FiniteMechanism& per_entry, std::size_t num_entries) {
  const DatabaseShape in{num_entries, per_entry.num_inputs()};
  const DatabaseShape out{num_entries, per_entry.num_outputs()};
  absl::StatusOr<std::vector<Label>> x_labels =
      DatabaseLabels(num_entries, per_entry.x_labels());
  if (!x_labels.ok()) return x_labels.status();
  absl::StatusOr<std::vector<Label>> y_labels =
      DatabaseLabels(num_entries, per_entry.y_labels());
  if (!y_labels.ok()) return y_labels.status();
  std::vector<std::size_t> xs(num_entries), ys(num_entries);
  std::vector<std::vector<LogReal>> rows(
      x_labels->size(), std::vector<LogReal>(y_labels->size()));
  for (std::uint64_t xi = 0; xi < x_labels->size(); ++xi) {
    DecodeDatabase(xi, in, xs);
    for (std::uint64_t yi = 0; yi < y_labels->size(); ++yi) {
      DecodeDatabase(yi, out, ys);
      LogReal p = LogReal::One();
      for (std::size_t j = 0; j < num_entries; ++j) {
        p *= per_entry.log_prob(xs[j], ys[j]);
      }
      rows[xi][yi] = p;
    }
  }
  return FiniteMechanism::FromLogRows(*std::move(x_labels),
                                      *std::move(y_labels), std::move(rows));
}

LogReal LaplaceLogDensity(double center, double scale, double y) {
  return LogReal::FromLog(-std::log(2.0 * scale) -
                          std::abs(y - center) / scale);
}

absl::StatusOr<LaplaceMechanism> LaplaceMechanism::Create(
    std::vector<Label> x_labels, std::vector<double> centers, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Laplace scale must be positive, got %g", scale));
  }
  if (x_labels.size() != centers.size() || centers.empty()) {
    return absl::InvalidArgumentError("one center per secret label required");
  }
  for (double c : centers) {
    if (!std::isfinite(c))
      return absl::InvalidArgumentError("non-finite center");
  }
  return LaplaceMechanism(std::move(x_labels), std::move(centers), scale);
}

std::vector<LogReal> LaplaceMechanism::ChannelAt(double y) const {
  std::vector<LogReal> column;
  column.reserve(centers_.size());
  for (double c : centers_) column.push_back(LaplaceLogDensity(c, scale_, y));
  return column;
}

absl::StatusOr<QueryLaplaceMechanism> QueryLaplaceMechanism::Create(
    Query query, DatabaseShape shape, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Laplace scale must be positive, got %g", scale));
  }
  if (shape.num_entries == 0 || shape.alphabet_size == 0) {
    return absl::InvalidArgumentError("empty database shape");
  }
  return QueryLaplaceMechanism(std::move(query), shape, scale);
}

absl::StatusOr<LaplaceMechanism> QueryLaplaceMechanism::Materialize(
    const std::vector<Label>& alphabet) const {
  if (alphabet.size() != shape_.alphabet_size) {
    return absl::InvalidArgumentError("alphabet does not match shape");
  }
  absl::StatusOr<std::vector<Label>> labels =
      DatabaseLabels(shape_.num_entries, alphabet);
  if (!labels.ok()) return labels.status();
  std::vector<double> centers;
  centers.reserve(labels->size());
  std::vector<std::size_t> db(shape_.num_entries);
  for (std::uint64_t index = 0; index < labels->size(); ++index) {
    DecodeDatabase(index, shape_, db);
    centers.push_back(query_(db));
  }
  return LaplaceMechanism::Create(*std::move(labels), std::move(centers),
                                  scale_);
}

absl::StatusOr<double> L1Sensitivity(const Query& query,
                                     const DatabaseShape& shape) {
  if (!shape.EnumerableWithin(kMaxExplicitDatabases)) {
    if (query.analytic_sensitivity().has_value()) {
      return *query.analytic_sensitivity();
    }
    return absl::InvalidArgumentError("sensitivity requires analytic form");
  }
  const std::uint64_t count = *shape.NumDatabases();
  std::vector<double> values(count);
  std::vector<std::size_t> db(shape.num_entries);
  for (std::uint64_t index = 0; index < count; ++index) {
    DecodeDatabase(index, shape, db);
    values[index] = query(db);
  }
  double sensitivity = 0.0;
  for (std::uint64_t index = 0; index < count; ++index) {
    DecodeDatabase(index, shape, db);
    for (std::size_t j = 0; j < shape.num_entries; ++j) {
      const std::size_t original = db[j];
      for (std::size_t s = 0; s < shape.alphabet_size; ++s) {
        if (s == original) continue;
        db[j] = s;
        sensitivity = std::max(
            sensitivity,
            std::abs(values[index] - values[EncodeDatabase(db, shape)]));
      }
      db[j] = original;
    }
  }
  return sensitivity;
}

absl::StatusOr<QueryLaplaceMechanism> LaplaceForQuery(
    const Query& query, const DatabaseShape& shape, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "epsilon must be positive and finite, got %g", epsilon));
  }
  absl::StatusOr<double> sensitivity = L1Sensitivity(query, shape);
  if (!sensitivity.ok()) return sensitivity.status();
  if (*sensitivity <= 0.0) {
    return absl::InvalidArgumentError("degenerate query");
  }
  return QueryLaplaceMechanism::Create(query, shape, *sensitivity / epsilon);
}

absl::StatusOr<double> DpLevelFinite(const FiniteMechanism& mechanism,
                                     const DatabaseShape& shape) {
  const auto count = shape.NumDatabases();
  if (!count.has_value() || *count != mechanism.num_inputs()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "mechanism has %d inputs but the database space has %s",
        mechanism.num_inputs(),
        count.has_value() ? absl::StrFormat("%d", *count) : "too many"));
  }
  double level = 0.0;
  std::vector<std::size_t> db(shape.num_entries);
  for (std::uint64_t x = 0; x < *count; ++x) {
    DecodeDatabase(x, shape, db);
    for (std::size_t j = 0; j < shape.num_entries; ++j) {
      const std::size_t original = db[j];
      for (std::size_t s = 0; s < shape.alphabet_size; ++s) {
        if (s == original) continue;
        db[j] = s;
        const std::uint64_t neighbor = EncodeDatabase(db, shape);
        for (std::size_t y = 0; y < mechanism.num_outputs(); ++y) {
          const LogReal p = mechanism.log_prob(x, y);
          const LogReal q = mechanism.log_prob(neighbor, y);
          if (p.IsZero()) continue;
          if (q.IsZero()) return kInf;
          level = std::max(level, p.log() - q.log());
        }
      }
      db[j] = original;
    }
  }
  return level;
}

double DpLevelLaplace(double scale, double sensitivity) {
  return sensitivity / scale;
}

absl::StatusOr<double> MaxNeighborLogDensityRatio(
    const QueryLaplaceMechanism& mechanism, std::span<const double> y_grid) {
  const double b = mechanism.scale();
  double worst = -kInf;
  auto update = [&](double center_a, double center_b) {
    for (double y : y_grid) {
      worst = std::max(worst, LaplaceLogDensity(center_a, b, y).log() -
                                  LaplaceLogDensity(center_b, b, y).log());
    }
  };
  const DatabaseShape& shape = mechanism.shape();
  const auto& form = mechanism.query().weight_form();
  if (form.has_value()) {
    // Changing one entry moves the count by at most one.
    for (std::size_t c = 0; c <= shape.num_entries; ++c) {
      if (c + 1 <= shape.num_entries) {
        update(form->At(double(c)), form->At(double(c + 1)));
        update(form->At(double(c + 1)), form->At(double(c)));
      }
      update(form->At(double(c)), form->At(double(c)));
    }
    return worst;
  }
  if (!shape.EnumerableWithin(kMaxExplicitDatabases)) {
    return absl::ResourceExhaustedError("enumeration cutoff exceeded");
  }
  const std::uint64_t count = *shape.NumDatabases();
  std::vector<std::size_t> db(shape.num_entries);
  for (std::uint64_t x = 0; x < count; ++x) {
    DecodeDatabase(x, shape, db);
    const double fx = mechanism.query()(db);
    for (std::size_t j = 0; j < shape.num_entries; ++j) {
      const std::size_t original = db[j];
      for (std::size_t s = 0; s < shape.alphabet_size; ++s) {
        if (s == original) continue;
        db[j] = s;
        update(fx, mechanism.query()(db));
      }
      db[j] = original;
    }
  }
  return worst;
}

}  // namespace pml

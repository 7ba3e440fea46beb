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

#include "pml/leakage.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pml/random.h"

namespace pml {

namespace {

std::string FormatReal(double y) { return absl::StrFormat("%.17g", y); }

void AppendCompositions(std::vector<std::vector<std::size_t>>& out,
                        std::vector<std::size_t>& current,
                        std::size_t remaining, std::size_t parts) {
  if (parts == 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::size_t first = 1; first + parts - 1 <= remaining; ++first) {
    current.push_back(first);
    AppendCompositions(out, current, remaining - first, parts - 1);
    current.pop_back();
  }
}

// Compositions of `total` into `parts` positive integers.
std::vector<std::vector<std::size_t>> Compositions(std::size_t total,
                                                   std::size_t parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  AppendCompositions(out, current, total, parts);
  return out;
}

}  // namespace

absl::StatusOr<double> EpsMax(const FiniteDistribution& prior) {
  if (!prior.full_support()) {
    return absl::InvalidArgumentError("eps_max requires a full-support prior");
  }
  return -prior.log_prob(prior.ArgMin()).log();
}

absl::StatusOr<LeakageReport> PmlAt(const FiniteDistribution& prior,
                                    std::span<const LogReal> channel_at_y) {
  if (!prior.full_support()) {
    return absl::InvalidArgumentError("PML requires full-support prior");
  }
  if (channel_at_y.size() != prior.size()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("channel has %d entries for a prior over %d symbols",
                        channel_at_y.size(), prior.size()));
  }
  std::size_t argmax = 0;
  for (std::size_t x = 0; x < prior.size(); ++x) {
    if (std::isnan(channel_at_y[x].log())) {
      return absl::InvalidArgumentError("NaN in channel");
    }
    if (channel_at_y[x] > channel_at_y[argmax]) argmax = x;
  }

  LeakageReport report;
  report.eps_max = *EpsMax(prior);
  const double log_best = channel_at_y[argmax].log();
  if (std::isinf(log_best) && log_best < 0) {
    report.pml = 0.0;
    report.argmax = 0;
  } else {
    // P_Y(y) / max_x P(y|x) as a prior-weighted sum of ratios <= 1.
    std::vector<double> ratio(prior.size());
    for (std::size_t x = 0; x < prior.size(); ++x) {
      ratio[x] = prior.log_prob(x).log() + (channel_at_y[x].log() - log_best);
    }
    report.pml = std::max(0.0, -*LogSumExp(ratio));
    report.argmax = argmax;
  }
  report.argmax_label = prior.label(report.argmax);
  report.upper_bound_satisfied = report.pml <= report.eps_max + kBoundSlack;
  return report;
}

absl::StatusOr<LeakageReport> Pml(const FiniteDistribution& prior,
                                  const FiniteMechanism& mechanism,
                                  std::size_t y) {
  if (y >= mechanism.num_outputs()) {
    return absl::OutOfRangeError("outcome index out of range");
  }
  if (mechanism.x_labels() != prior.labels()) {
    return absl::InvalidArgumentError("prior and mechanism inputs differ");
  }
  absl::StatusOr<LeakageReport> report = PmlAt(prior, mechanism.ChannelAt(y));
  if (report.ok()) report->outcome = mechanism.y_labels()[y];
  return report;
}

absl::StatusOr<LeakageReport> Pml(const FiniteDistribution& prior,
                                  const LaplaceMechanism& mechanism, double y) {
  if (mechanism.x_labels().size() != prior.size()) {
    return absl::InvalidArgumentError("prior and mechanism inputs differ");
  }
  absl::StatusOr<LeakageReport> report = PmlAt(prior, mechanism.ChannelAt(y));
  if (report.ok()) report->outcome = FormatReal(y);
  return report;
}

absl::StatusOr<std::vector<LeakageReport>> PmlProfile(
    const FiniteDistribution& prior, const FiniteMechanism& mechanism) {
  std::vector<LeakageReport> reports;
  for (std::size_t y = 0; y < mechanism.num_outputs(); ++y) {
    absl::StatusOr<LeakageReport> r = Pml(prior, mechanism, y);
    if (!r.ok()) return r.status();
    reports.push_back(*std::move(r));
  }
  return reports;
}

absl::StatusOr<std::vector<LeakageReport>> PmlProfile(
    const FiniteDistribution& prior, const LaplaceMechanism& mechanism,
    std::span<const double> y_grid) {
  if (y_grid.empty()) return absl::InvalidArgumentError("empty y grid");
  std::vector<LeakageReport> reports;
  reports.reserve(y_grid.size());
  for (double y : y_grid) {
    absl::StatusOr<LeakageReport> r = Pml(prior, mechanism, y);
    if (!r.ok()) return r.status();
    reports.push_back(*std::move(r));
  }
  return reports;
}

absl::StatusOr<std::vector<LogReal>> EntryChannel(
    const DatabaseModel& model, std::span<const LogReal> database_channel,
    std::size_t entry) {
  const DatabaseShape shape = model.shape();
  if (entry >= shape.num_entries) {
    return absl::OutOfRangeError("entry index out of range");
  }
  const auto count = shape.NumDatabases();
  if (!count.has_value() || *count != database_channel.size()) {
    return absl::InvalidArgumentError(
        "mechanism inputs do not enumerate the database space");
  }
  std::vector<std::vector<double>> joint(shape.alphabet_size);
  std::vector<std::vector<double>> mass(shape.alphabet_size);
  std::vector<std::size_t> db(shape.num_entries);
  for (std::uint64_t x = 0; x < *count; ++x) {
    DecodeDatabase(x, shape, db);
    const LogReal p = model.LogProbability(db);
    joint[db[entry]].push_back((database_channel[x] * p).log());
    mass[db[entry]].push_back(p.log());
  }
  std::vector<LogReal> channel;
  for (std::size_t d = 0; d < shape.alphabet_size; ++d) {
    const double log_mass = *LogSumExp(mass[d]);
    if (std::isinf(log_mass)) {
      return absl::InvalidArgumentError("PML requires full-support prior");
    }
    channel.push_back(LogReal::FromLog(*LogSumExp(joint[d]) - log_mass));
  }
  return channel;
}

namespace {

absl::StatusOr<LeakageReport> EntryReport(const DatabaseModel& model,
                                          std::span<const LogReal> channel,
                                          std::size_t entry) {
  absl::StatusOr<FiniteDistribution> marginal = model.MarginalOfEntry(entry);
  if (!marginal.ok()) return marginal.status();
  absl::StatusOr<LeakageReport> report = PmlAt(*marginal, channel);
  if (!report.ok()) return report.status();
  report->context = LeakageContext::kEntry;
  report->entry = entry;
  return report;
}

}  // namespace

absl::StatusOr<LeakageReport> PmlEntry(const DatabaseModel& model,
                                       const FiniteMechanism& mechanism,
                                       std::size_t entry, std::size_t y) {
  if (y >= mechanism.num_outputs()) {
    return absl::OutOfRangeError("outcome index out of range");
  }
  absl::StatusOr<std::vector<LogReal>> channel =
      EntryChannel(model, mechanism.ChannelAt(y), entry);
  if (!channel.ok()) return channel.status();
  absl::StatusOr<LeakageReport> report = EntryReport(model, *channel, entry);
  if (report.ok()) report->outcome = mechanism.y_labels()[y];
  return report;
}

absl::StatusOr<LeakageReport> PmlEntry(const DatabaseModel& model,
                                       const LaplaceMechanism& mechanism,
                                       std::size_t entry, double y) {
  absl::StatusOr<std::vector<LogReal>> channel =
      EntryChannel(model, mechanism.ChannelAt(y), entry);
  if (!channel.ok()) return channel.status();
  absl::StatusOr<LeakageReport> report = EntryReport(model, *channel, entry);
  if (report.ok()) report->outcome = FormatReal(y);
  return report;
}

LogReal LaplaceMixtureLogDensity(std::span<const QueryAtom> atoms, double scale,
                                 double y) {
  std::vector<double> terms;
  terms.reserve(atoms.size());
  for (const QueryAtom& atom : atoms) {
    terms.push_back(
        (atom.log_prob * LaplaceLogDensity(atom.value, scale, y)).log());
  }
  if (terms.empty()) return LogReal::Zero();
  return LogReal::FromLog(*LogSumExp(terms));
}

absl::StatusOr<LogReal> EntryConditionalLogDensity(
    const DatabaseModel& model, const QueryLaplaceMechanism& mechanism,
    std::size_t entry, std::size_t symbol, double y) {
  absl::StatusOr<std::vector<QueryAtom>> law =
      model.QueryLawGivenEntry(entry, symbol, mechanism.query());
  if (!law.ok()) return law.status();
  return LaplaceMixtureLogDensity(*law, mechanism.scale(), y);
}

absl::StatusOr<LeakageReport> PmlEntry(const DatabaseModel& model,
                                       const QueryLaplaceMechanism& mechanism,
                                       std::size_t entry, double y) {
  if (model.num_entries() != mechanism.shape().num_entries ||
      model.alphabet().size() != mechanism.shape().alphabet_size) {
    return absl::InvalidArgumentError("model and mechanism shapes differ");
  }
  std::vector<LogReal> channel;
  for (std::size_t d = 0; d < model.alphabet().size(); ++d) {
    absl::StatusOr<LogReal> density =
        EntryConditionalLogDensity(model, mechanism, entry, d, y);
    if (!density.ok()) return density.status();
    channel.push_back(*density);
  }
  absl::StatusOr<LeakageReport> report = EntryReport(model, channel, entry);
  if (report.ok()) report->outcome = FormatReal(y);
  return report;
}

absl::StatusOr<DpEntryLeakageReport> DpEntryLeakageCheck(
    const FiniteMechanism& mechanism, const DatabaseShape& shape,
    double epsilon, const DpEntryLeakageOptions& options) {
  absl::StatusOr<double> level = DpLevelFinite(mechanism, shape);
  if (!level.ok()) return level.status();

  std::vector<Label> alphabet;
  if (shape.num_entries == 1) {
    alphabet = mechanism.x_labels();
  } else {
    for (std::size_t s = 0; s < shape.alphabet_size; ++s) {
      alphabet.push_back(std::to_string(s));
    }
  }

  DpEntryLeakageReport report;
  report.dp_level = *level;
  report.epsilon = epsilon;
  report.mechanism_is_dp = *level <= epsilon + 1e-12;
  report.max_observed_pml = -std::numeric_limits<double>::infinity();
  report.grid_max_pml = report.max_observed_pml;
  report.sample_max_pml = report.max_observed_pml;

  // Per-outcome columns are shared across priors.
  std::vector<std::vector<LogReal>> columns;
  for (std::size_t y = 0; y < mechanism.num_outputs(); ++y) {
    columns.push_back(mechanism.ChannelAt(y));
  }

  auto evaluate = [&](std::vector<FiniteDistribution> laws,
                      double& bucket_max) -> absl::Status {
    absl::StatusOr<ProductModel> model = ProductModel::Create(laws);
    if (!model.ok()) return model.status();
    ++report.priors_evaluated;
    for (std::size_t i = 0; i < shape.num_entries; ++i) {
      for (std::size_t y = 0; y < columns.size(); ++y) {
        absl::StatusOr<std::vector<LogReal>> channel =
            EntryChannel(*model, columns[y], i);
        if (!channel.ok()) return channel.status();
        absl::StatusOr<LeakageReport> r = PmlAt(laws[i], *channel);
        if (!r.ok()) return r.status();
        bucket_max = std::max(bucket_max, r->pml);
        if (r->pml > report.max_observed_pml) {
          report.max_observed_pml = r->pml;
          report.witness_prior = laws;
          report.witness_entry = i;
          report.witness_outcome = y;
        }
      }
    }
    return absl::OkStatus();
  };

  if (options.grid_resolution > 0) {
    const std::size_t k = shape.alphabet_size;
    const double denom = static_cast<double>(options.grid_resolution + k - 1);
    for (const auto& parts : Compositions(options.grid_resolution + k - 1, k)) {
      std::vector<double> p;
      for (std::size_t c : parts) p.push_back(static_cast<double>(c) / denom);
      absl::StatusOr<FiniteDistribution> law =
          FiniteDistribution::FromProbabilities(alphabet, p);
      if (!law.ok()) return law.status();
      if (absl::Status s =
              evaluate(std::vector<FiniteDistribution>(shape.num_entries, *law),
                       report.grid_max_pml);
          !s.ok()) {
        return s;
      }
    }
  }
  Rng rng(options.seed);
  for (std::size_t sample = 0; sample < options.prior_samples; ++sample) {
    std::vector<FiniteDistribution> laws;
    for (std::size_t i = 0; i < shape.num_entries; ++i) {
      absl::StatusOr<FiniteDistribution> law =
          FiniteDistribution::FromProbabilities(
              alphabet, rng.SimplexPoint(shape.alphabet_size));
      if (!law.ok()) return law.status();
      laws.push_back(*std::move(law));
    }
    if (absl::Status s = evaluate(std::move(laws), report.sample_max_pml);
        !s.ok()) {
      return s;
    }
  }
  if (report.priors_evaluated == 0) {
    return absl::InvalidArgumentError("no priors to evaluate");
  }
  report.pml_within_epsilon = report.max_observed_pml <= epsilon + kBoundSlack;
  return report;
}

}  // namespace pml

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

#include "pml/database_model.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pml {

void DecodeDatabase(std::uint64_t index, const DatabaseShape& shape,
                    std::span<std::size_t> out) {
  for (std::size_t j = shape.num_entries; j-- > 0;) {
    out[j] = index % shape.alphabet_size;
    index /= shape.alphabet_size;
  }
}

std::uint64_t EncodeDatabase(std::span<const std::size_t> database,
                             const DatabaseShape& shape) {
  std::uint64_t index = 0;
  for (std::size_t symbol : database)
    index = index * shape.alphabet_size + symbol;
  return index;
}

Label DatabaseLabel(std::span<const std::size_t> database,
                    const std::vector<Label>& alphabet) {
  const bool compact =
      std::all_of(alphabet.begin(), alphabet.end(),
                  [](const Label& l) { return l.size() == 1; });
  Label out;
  for (std::size_t j = 0; j < database.size(); ++j) {
    if (!compact && j > 0) out += ',';
    out += alphabet[database[j]];
  }
  return out;
}

absl::StatusOr<std::vector<Label>> DatabaseLabels(
    std::size_t num_entries, const std::vector<Label>& alphabet,
    std::uint64_t limit) {
  const DatabaseShape shape{num_entries, alphabet.size()};
  if (!shape.EnumerableWithin(limit)) {
    return absl::ResourceExhaustedError("enumeration cutoff exceeded");
  }
  const std::uint64_t count = *shape.NumDatabases();
  std::vector<Label> labels;
  labels.reserve(count);
  std::vector<std::size_t> db(num_entries);
  for (std::uint64_t index = 0; index < count; ++index) {
    DecodeDatabase(index, shape, db);
    labels.push_back(DatabaseLabel(db, alphabet));
  }
  return labels;
}

std::vector<QueryAtom> MergeQueryAtoms(std::vector<QueryAtom> atoms) {
  std::sort(
      atoms.begin(), atoms.end(),
      [](const QueryAtom& a, const QueryAtom& b) { return a.value < b.value; });
  std::vector<QueryAtom> merged;
  for (const QueryAtom& atom : atoms) {
    if (!merged.empty() && merged.back().value == atom.value) {
      merged.back().log_prob += atom.log_prob;
    } else {
      merged.push_back(atom);
    }
  }
  return merged;
}

absl::Status DatabaseModel::CheckEntry(std::size_t entry) const {
  if (entry >= num_entries()) {
    return absl::OutOfRangeError(absl::StrFormat(
        "entry index %d out of range for %d entries", entry, num_entries()));
  }
  return absl::OkStatus();
}

absl::Status DatabaseModel::CheckSymbol(std::size_t symbol) const {
  if (symbol >= alphabet().size()) {
    return absl::OutOfRangeError(
        absl::StrFormat("symbol index %d out of range", symbol));
  }
  return absl::OkStatus();
}

absl::Status DatabaseModel::CheckEnumerable() const {
  if (!shape().EnumerableWithin(kMaxExplicitDatabases)) {
    return absl::ResourceExhaustedError("enumeration cutoff exceeded");
  }
  return absl::OkStatus();
}

absl::StatusOr<FiniteDistribution> DatabaseModel::MarginalOfEntry(
    std::size_t entry) const {
  if (absl::Status s = CheckEntry(entry); !s.ok()) return s;
  if (absl::Status s = CheckEnumerable(); !s.ok()) return s;
  const DatabaseShape s = shape();
  std::vector<std::vector<double>> terms(s.alphabet_size);
  std::vector<std::size_t> db(s.num_entries);
  const std::uint64_t count = *s.NumDatabases();
  for (std::uint64_t index = 0; index < count; ++index) {
    DecodeDatabase(index, s, db);
    terms[db[entry]].push_back(LogProbability(db).log());
  }
  std::vector<LogReal> log_p;
  for (const auto& t : terms) log_p.push_back(LogReal::FromLog(*LogSumExp(t)));
  return FiniteDistribution::FromLogWeights(alphabet(), std::move(log_p));
}

absl::StatusOr<FiniteDistribution> DatabaseModel::ConditionOnEntry(
    std::size_t entry, std::size_t symbol) const {
  if (absl::Status s = CheckEntry(entry); !s.ok()) return s;
  if (absl::Status s = CheckSymbol(symbol); !s.ok()) return s;
  const std::size_t rest = num_entries() - 1;
  absl::StatusOr<std::vector<Label>> labels = DatabaseLabels(rest, alphabet());
  if (!labels.ok()) return labels.status();
  const DatabaseShape rest_shape{rest, alphabet().size()};
  std::vector<std::size_t> others(rest);
  std::vector<std::size_t> db(num_entries());
  std::vector<LogReal> weights;
  weights.reserve(labels->size());
  for (std::uint64_t index = 0; index < labels->size(); ++index) {
    DecodeDatabase(index, rest_shape, others);
    std::copy(others.begin(), others.begin() + entry, db.begin());
    db[entry] = symbol;
    std::copy(others.begin() + entry, others.end(), db.begin() + entry + 1);
    weights.push_back(LogProbability(db));
  }
  absl::StatusOr<FiniteDistribution> conditional =
      FiniteDistribution::FromLogWeights(*std::move(labels),
                                         std::move(weights));
  if (!conditional.ok()) {
    return absl::InvalidArgumentError("unsupported condition");
  }
  return conditional;
}

absl::StatusOr<std::vector<QueryAtom>> DatabaseModel::QueryLawGivenEntry(
    std::size_t entry, std::size_t symbol, const Query& query) const {
  if (absl::Status s = CheckEntry(entry); !s.ok()) return s;
  if (absl::Status s = CheckSymbol(symbol); !s.ok()) return s;
  if (absl::Status s = CheckEnumerable(); !s.ok()) return s;
  const DatabaseShape s = shape();
  const std::uint64_t count = *s.NumDatabases();
  std::vector<std::size_t> db(s.num_entries);
  std::vector<QueryAtom> atoms;
  for (std::uint64_t index = 0; index < count; ++index) {
    DecodeDatabase(index, s, db);
    if (db[entry] != symbol) continue;
    const LogReal lp = LogProbability(db);
    if (lp.IsZero()) continue;
    atoms.push_back({query(db), lp});
  }
  atoms = MergeQueryAtoms(std::move(atoms));
  std::vector<double> logs;
  for (const QueryAtom& a : atoms) logs.push_back(a.log_prob.log());
  if (atoms.empty()) return absl::InvalidArgumentError("unsupported condition");
  const LogReal total = LogReal::FromLog(*LogSumExp(logs));
  for (QueryAtom& a : atoms) a.log_prob /= total;
  return atoms;
}

absl::StatusOr<ExplicitJointModel> ExplicitJointModel::Create(
    std::size_t num_entries, std::vector<Label> alphabet,
    FiniteDistribution joint) {
  absl::StatusOr<std::vector<Label>> labels =
      DatabaseLabels(num_entries, alphabet);
  if (!labels.ok()) return labels.status();
  if (*labels != joint.labels()) {
    return absl::InvalidArgumentError(
        "joint table is not indexed by the database enumeration");
  }
  return ExplicitJointModel(num_entries, std::move(alphabet), std::move(joint));
}

LogReal ExplicitJointModel::LogProbability(
    std::span<const std::size_t> database) const {
  return joint_.log_prob(EncodeDatabase(database, shape()));
}

absl::StatusOr<ProductModel> ProductModel::Create(
    std::vector<FiniteDistribution> entry_laws) {
  if (entry_laws.empty()) {
    return absl::InvalidArgumentError("product model needs at least one entry");
  }
  for (const FiniteDistribution& law : entry_laws) {
    if (law.labels() != entry_laws.front().labels()) {
      return absl::InvalidArgumentError("entry alphabets differ");
    }
  }
  return ProductModel(std::move(entry_laws));
}

absl::StatusOr<ProductModel> ProductModel::Identical(
    FiniteDistribution entry_law, std::size_t num_entries) {
  return Create(std::vector<FiniteDistribution>(num_entries, entry_law));
}

LogReal ProductModel::LogProbability(
    std::span<const std::size_t> database) const {
  LogReal p = LogReal::One();
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    p *= entries_[j].log_prob(database[j]);
  }
  return p;
}

absl::StatusOr<FiniteDistribution> ProductModel::MarginalOfEntry(
    std::size_t entry) const {
  if (absl::Status s = CheckEntry(entry); !s.ok()) return s;
  return entries_[entry];
}

absl::StatusOr<std::vector<QueryAtom>> ProductModel::QueryLawGivenEntry(
    std::size_t entry, std::size_t symbol, const Query& query) const {
  if (!query.weight_form().has_value()) {
    return DatabaseModel::QueryLawGivenEntry(entry, symbol, query);
  }
  if (absl::Status s = CheckEntry(entry); !s.ok()) return s;
  if (absl::Status s = CheckSymbol(symbol); !s.ok()) return s;
  if (entries_[entry].log_prob(symbol).IsZero()) {
    return absl::InvalidArgumentError("unsupported condition");
  }
  const WeightForm& form = *query.weight_form();
  // law[c] = log P(c of the other entries equal form.symbol).
  std::vector<LogReal> law{LogReal::One()};
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j == entry) continue;
    const LogReal hit = form.symbol < alphabet().size()
                            ? entries_[j].log_prob(form.symbol)
                            : LogReal::Zero();
    const LogReal miss =
        LogReal::FromLog(std::log1p(-std::min(1.0, hit.ToLinear())));
    std::vector<LogReal> next(law.size() + 1);
    for (std::size_t c = 0; c < law.size(); ++c) {
      next[c] += law[c] * miss;
      next[c + 1] += law[c] * hit;
    }
    law = std::move(next);
  }
  const double own = symbol == form.symbol ? 1.0 : 0.0;
  std::vector<QueryAtom> atoms;
  for (std::size_t c = 0; c < law.size(); ++c) {
    if (law[c].IsZero()) continue;
    atoms.push_back({form.At(static_cast<double>(c) + own), law[c]});
  }
  return MergeQueryAtoms(std::move(atoms));
}

}  // namespace pml

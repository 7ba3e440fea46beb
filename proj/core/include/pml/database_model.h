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

#ifndef PML_DATABASE_MODEL_H_
#define PML_DATABASE_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/distribution.h"
#include "pml/log_real.h"
#include "pml/query.h"

namespace pml {

// Writes the digits of database number `index` into `out` (size n).
void DecodeDatabase(std::uint64_t index, const DatabaseShape& shape,
                    std::span<std::size_t> out);
std::uint64_t EncodeDatabase(std::span<const std::size_t> database,
                             const DatabaseShape& shape);
// Concatenated symbol labels, comma-separated unless every label is a single
// character.
Label DatabaseLabel(std::span<const std::size_t> database,
                    const std::vector<Label>& alphabet);
// Labels of all |D|^n databases in enumeration order.
absl::StatusOr<std::vector<Label>> DatabaseLabels(
    std::size_t num_entries, const std::vector<Label>& alphabet,
    std::uint64_t limit = kMaxExplicitDatabases);

// One atom of the law of a query value.
struct QueryAtom {
  double value = 0.0;
  LogReal log_prob;
};

// A joint law P_X over databases X = (D_0, ..., D_{n-1}) in D^n. Entry indices
// are zero-based. Implementations either hold the joint table or answer
// marginal and conditional queries analytically.
class DatabaseModel {
 public:
  virtual ~DatabaseModel() = default;

  virtual std::size_t num_entries() const = 0;
  virtual const std::vector<Label>& alphabet() const = 0;
  DatabaseShape shape() const { return {num_entries(), alphabet().size()}; }

  // log P_X(database).
  virtual LogReal LogProbability(
      std::span<const std::size_t> database) const = 0;

  // P_{D_i}: the joint marginalized over the remaining entries.
  virtual absl::StatusOr<FiniteDistribution> MarginalOfEntry(
      std::size_t entry) const;

  // P_{D_-i | D_i = symbol} over the remaining n-1 entries, labeled by their
  // database labels. Fails for zero-probability symbols and for spaces beyond
  // the explicit-table limit.
  virtual absl::StatusOr<FiniteDistribution> ConditionOnEntry(
      std::size_t entry, std::size_t symbol) const;

  // Law of f(X) given D_i = symbol, atoms sorted by value with equal values
  // merged. The default enumerates D^n; structured models override this.
  virtual absl::StatusOr<std::vector<QueryAtom>> QueryLawGivenEntry(
      std::size_t entry, std::size_t symbol, const Query& query) const;

 protected:
  absl::Status CheckEntry(std::size_t entry) const;
  absl::Status CheckSymbol(std::size_t symbol) const;
  absl::Status CheckEnumerable() const;
};

// Explicit joint table over D^n, |D|^n <= kMaxExplicitDatabases.
class ExplicitJointModel : public DatabaseModel {
 public:
  // `joint` must be labeled and ordered by DatabaseLabels(n, alphabet).
  static absl::StatusOr<ExplicitJointModel> Create(std::size_t num_entries,
                                                   std::vector<Label> alphabet,
                                                   FiniteDistribution joint);

  std::size_t num_entries() const override { return num_entries_; }
  const std::vector<Label>& alphabet() const override { return alphabet_; }
  LogReal LogProbability(std::span<const std::size_t> database) const override;
  const FiniteDistribution& joint() const { return joint_; }

 private:
  ExplicitJointModel(std::size_t num_entries, std::vector<Label> alphabet,
                     FiniteDistribution joint)
      : num_entries_(num_entries),
        alphabet_(std::move(alphabet)),
        joint_(std::move(joint)) {}

  std::size_t num_entries_;
  std::vector<Label> alphabet_;
  FiniteDistribution joint_;
};

// Independent entries, P_X = prod_i P_{D_i}.
class ProductModel : public DatabaseModel {
 public:
  // All entry laws must share the same labels.
  static absl::StatusOr<ProductModel> Create(
      std::vector<FiniteDistribution> entry_laws);
  static absl::StatusOr<ProductModel> Identical(FiniteDistribution entry_law,
                                                std::size_t num_entries);

  std::size_t num_entries() const override { return entries_.size(); }
  const std::vector<Label>& alphabet() const override {
    return entries_.front().labels();
  }
  LogReal LogProbability(std::span<const std::size_t> database) const override;
  absl::StatusOr<FiniteDistribution> MarginalOfEntry(
      std::size_t entry) const override;
  // Weight-form queries use a Poisson-binomial recursion over the other
  // entries instead of enumerating D^n.
  absl::StatusOr<std::vector<QueryAtom>> QueryLawGivenEntry(
      std::size_t entry, std::size_t symbol, const Query& query) const override;

  const std::vector<FiniteDistribution>& entry_laws() const { return entries_; }

 private:
  explicit ProductModel(std::vector<FiniteDistribution> entries)
      : entries_(std::move(entries)) {}

  std::vector<FiniteDistribution> entries_;
};

// Sorts atoms by value and merges equal values.
std::vector<QueryAtom> MergeQueryAtoms(std::vector<QueryAtom> atoms);

}  // namespace pml

#endif  // PML_DATABASE_MODEL_H_

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

#include "pml/query.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pml {

std::optional<std::uint64_t> DatabaseShape::NumDatabases() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < num_entries; ++i) {
    if (alphabet_size != 0 &&
        count > std::numeric_limits<std::uint64_t>::max() / alphabet_size) {
      return std::nullopt;
    }
    count *= alphabet_size;
  }
  return count;
}

namespace {

double CountSymbol(std::span<const std::size_t> database, std::size_t symbol) {
  return static_cast<double>(
      std::count(database.begin(), database.end(), symbol));
}

}  // namespace

Query Query::Counting(std::size_t symbol) {
  return Query(
      "counting",
      [symbol](std::span<const std::size_t> db) {
        return CountSymbol(db, symbol);
      },
      WeightForm{0.0, 1.0, symbol}, 1.0);
}

Query Query::EmpiricalFrequency(std::size_t num_entries, std::size_t symbol) {
  const double n = static_cast<double>(num_entries);
  return Query(
      "empirical_frequency",
      [symbol, n](std::span<const std::size_t> db) {
        return CountSymbol(db, symbol) / n;
      },
      WeightForm{0.0, 1.0 / n, symbol}, 1.0 / n);
}

Query Query::Constant(double value) {
  return Query(
      "constant", [value](std::span<const std::size_t>) { return value; },
      WeightForm{value, 0.0, 0}, 0.0);
}

Query Query::Custom(std::string name, Function fn,
                    std::optional<double> analytic_sensitivity) {
  return Query(std::move(name), std::move(fn), std::nullopt,
               analytic_sensitivity);
}

absl::StatusOr<Query> Query::FromName(std::string_view name,
                                      std::size_t num_entries) {
  if (name == "counting") return Counting();
  if (name == "empirical_frequency") {
    if (num_entries == 0) {
      return absl::InvalidArgumentError(
          "empirical_frequency needs at least one entry");
    }
    return EmpiricalFrequency(num_entries);
  }
  if (name == "constant") return Constant(0.0);
  return absl::InvalidArgumentError(
      absl::StrCat("unknown query '", std::string(name), "'"));
}

}  // namespace pml

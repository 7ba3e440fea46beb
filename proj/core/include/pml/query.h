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

#ifndef PML_QUERY_H_
#define PML_QUERY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace pml {

// Databases are tuples of symbol indices into an alphabet D; entry 0 is the
// most significant digit when databases are enumerated lexicographically.
struct DatabaseShape {
  std::size_t num_entries = 0;
  std::size_t alphabet_size = 0;

  // |D|^n, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> NumDatabases() const;
  bool EnumerableWithin(std::uint64_t limit) const {
    const auto count = NumDatabases();
    return count.has_value() && *count <= limit;
  }
};

// Largest database space materialized as an explicit table.
inline constexpr std::uint64_t kMaxExplicitDatabases = std::uint64_t{1} << 20;

// Queries whose value depends on the database only through the number of
// entries equal to `symbol`: f(x) = intercept + slope * count.
struct WeightForm {
  double intercept = 0.0;
  double slope = 1.0;
  std::size_t symbol = 1;

  double At(double count) const { return intercept + slope * count; }
};

// A real-valued query f : D^n -> R.
class Query {
 public:
  using Function = std::function<double(std::span<const std::size_t>)>;

  // Number of entries equal to `symbol`.
  static Query Counting(std::size_t symbol = 1);
  // Fraction of the `num_entries` entries equal to `symbol`.
  static Query EmpiricalFrequency(std::size_t num_entries,
                                  std::size_t symbol = 1);
  static Query Constant(double value);
  static Query Custom(std::string name, Function fn,
                      std::optional<double> analytic_sensitivity = {});
  // "counting", "empirical_frequency" or "constant".
  static absl::StatusOr<Query> FromName(std::string_view name,
                                        std::size_t num_entries);

  double operator()(std::span<const std::size_t> database) const {
    return fn_(database);
  }
  const std::string& name() const { return name_; }
  const std::optional<WeightForm>& weight_form() const { return weight_form_; }
  std::optional<double> analytic_sensitivity() const {
    return analytic_sensitivity_;
  }

 private:
  Query(std::string name, Function fn, std::optional<WeightForm> weight_form,
        std::optional<double> sensitivity)
      : name_(std::move(name)),
        fn_(std::move(fn)),
        weight_form_(weight_form),
        analytic_sensitivity_(sensitivity) {}

  std::string name_;
  Function fn_;
  std::optional<WeightForm> weight_form_;
  std::optional<double> analytic_sensitivity_;
};

}  // namespace pml

#endif  // PML_QUERY_H_

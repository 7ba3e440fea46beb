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

#ifndef PML_TOOLS_RESULT_TABLE_H_
#define PML_TOOLS_RESULT_TABLE_H_

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/status.h"

namespace pml::cli {

// A blank cell, a real number, or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct ResultTable {
  // Written as "# key=value" rows ahead of the column header.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void AddMeta(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
  }
  // Fails unless the row has one cell per column.
  absl::Status AddRow(std::vector<Cell> row);
  // Column `name` as numbers; blank and text cells are skipped with their x.
  std::vector<std::pair<double, double>> Series(const std::string& x,
                                                const std::string& y) const;
};

// Shortest round-trip formatting: 17 significant digits.
std::string FormatReal(double v);

// Comma-separated, '.' decimal point. `timestamp` adds a "# generated=" row.
void WriteCsv(const ResultTable& table, bool timestamp, std::ostream& out);

}  // namespace pml::cli

#endif  // PML_TOOLS_RESULT_TABLE_H_

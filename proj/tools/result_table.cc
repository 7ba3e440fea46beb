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

#include "result_table.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <string>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pml::cli {
namespace {

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Render(const Cell& cell) {
  if (const double* v = std::get_if<double>(&cell)) return FormatReal(*v);
  if (const std::string* s = std::get_if<std::string>(&cell)) return Quote(*s);
  return "";
}

}  // namespace

std::string FormatReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return absl::StrFormat("%.17g", v);
}

absl::Status ResultTable::AddRow(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    return absl::InternalError(absl::StrCat("row has ", row.size(),
                                            " cells, table has ",
                                            columns.size(), " columns"));
  }
  rows.push_back(std::move(row));
  return absl::OkStatus();
}

std::vector<std::pair<double, double>> ResultTable::Series(
    const std::string& x, const std::string& y) const {
  std::size_t xi = columns.size();
  std::size_t yi = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == x) xi = i;
    if (columns[i] == y) yi = i;
  }
  std::vector<std::pair<double, double>> out;
  if (xi == columns.size() || yi == columns.size()) return out;
  for (const auto& row : rows) {
    const double* a = std::get_if<double>(&row[xi]);
    const double* b = std::get_if<double>(&row[yi]);
    if (a != nullptr && b != nullptr) out.emplace_back(*a, *b);
  }
  return out;
}

void WriteCsv(const ResultTable& table, bool timestamp, std::ostream& out) {
  for (const auto& [key, value] : table.metadata) {
    out << "# " << key << "=" << value << "\n";
  }
  if (timestamp) {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated=" << buf << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << Quote(table.columns[i]);
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << Render(row[i]);
    }
    out << "\n";
  }
}

}  // namespace pml::cli

// Copyright 2026 The Sidelink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sidelink/weights_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sidelink/errors.h"

namespace sidelink {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

WeightMatrix ParseWeightsCsv(const std::string& text, double bandwidth_mhz) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<double> row;
    std::istringstream cells(trimmed);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const std::string field = Trim(cell);
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw InvalidConfigError("line " + std::to_string(line_no) +
                                 ": not a number: '" + field + "'");
      }
      row.push_back(value);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InvalidConfigError("line " + std::to_string(line_no) + " has " +
                               std::to_string(row.size()) + " columns, expected " +
                               std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidConfigError("weight file has no rows");
  try {
    return WeightMatrix::FromRows(rows, bandwidth_mhz);
  } catch (const InvalidWeightError& e) {
    throw InvalidConfigError(e.what());
  }
}

WeightMatrix LoadWeightsCsv(const std::filesystem::path& path, double bandwidth_mhz) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read weight file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseWeightsCsv(buffer.str(), bandwidth_mhz);
}

}  // namespace sidelink

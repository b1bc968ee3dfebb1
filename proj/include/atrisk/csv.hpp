/*
 * Copyright 2026 The atrisk Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ATRISK_CSV_HPP_
#define ATRISK_CSV_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atrisk/survey.hpp"

namespace atrisk {

// Canonical column order. `label` is optional on input.
inline constexpr std::string_view kCsvHeader =
    "gender,hispanic,major,physical_health,psych_health,diet,self_efficacy,"
    "importance,expectations,support,mod_days,mod_min,vig_days,vig_min,label";

// Plain comma-separated table; no quoting (no token in the format needs it).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line per row

  // Column position, or nullopt.
  std::optional<std::size_t> Find(std::string_view column) const;
  // Column position; throws Error(kMissingColumn) naming the column.
  std::size_t Require(std::string_view column) const;
};

// Throws kParse (with line number) on ragged rows, kIo on read failure.
CsvTable ParseCsv(std::istream& in);
CsvTable ReadCsvFile(const std::string& path);
void WriteCsv(std::ostream& out, const CsvTable& table);
void WriteCsvFile(const std::string& path, const CsvTable& table);

// Columns are located by header name, so extra columns are allowed and order
// is free. An empty or absent label cell leaves the label unset. Throws
// kMissingColumn, or kParse naming the line and column of a bad cell.
// Activity columns may be absent when require_activity is false.
std::vector<SurveyResponse> ResponsesFromTable(const CsvTable& table,
                                               bool require_activity = true);

// Parses an ActivityLog from the four activity columns of one row.
ActivityLog ActivityFromRow(const CsvTable& table, std::size_t row);

CsvTable ResponsesToTable(std::span<const SurveyResponse> responses);

std::vector<SurveyResponse> ReadResponses(const std::string& path);
void WriteResponses(const std::string& path,
                    std::span<const SurveyResponse> responses);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);

}  // namespace atrisk

#endif  // ATRISK_CSV_HPP_

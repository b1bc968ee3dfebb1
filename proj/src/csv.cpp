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

#include "atrisk/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "atrisk/error.hpp"

namespace atrisk {
namespace {

constexpr std::string_view kActivityColumns[] = {"mod_days", "mod_min",
                                                 "vig_days", "vig_min"};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> SplitLine(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.emplace_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

[[noreturn]] void CellError(const CsvTable& t, std::size_t row,
                            std::string_view column, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(t.line_numbers[row]) +
                                     ", column " + std::string(column) + ": " +
                                     what);
}

int ParseDays(const CsvTable& t, std::size_t row, std::size_t col) {
  const std::string& cell = t.rows[row][col];
  int value = 0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    CellError(t, row, t.header[col], "expected whole days, got '" + cell + "'");
  }
  return value;
}

double ParseMinutes(const CsvTable& t, std::size_t row, std::size_t col) {
  const std::string& cell = t.rows[row][col];
  double value = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || res.ec != std::errc() ||
      res.ptr != cell.data() + cell.size()) {
    CellError(t, row, t.header[col], "expected minutes, got '" + cell + "'");
  }
  return value;
}

}  // namespace

std::optional<std::size_t> CsvTable::Find(std::string_view column) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) return i;
  }
  return std::nullopt;
}

std::size_t CsvTable::Require(std::string_view column) const {
  if (auto i = Find(column)) return *i;
  throw Error(ErrorCode::kMissingColumn,
              "missing required column " + std::string(column));
}

CsvTable ParseCsv(std::istream& in) {
  CsvTable t;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto cells = SplitLine(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(t.header.size()) + " fields, got " +
                      std::to_string(cells.size()));
    }
    t.rows.push_back(std::move(cells));
    t.line_numbers.push_back(line_no);
  }
  if (!have_header) throw Error(ErrorCode::kParse, "empty CSV: no header");
  return t;
}

CsvTable ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ParseCsv(in);
}

void WriteCsv(std::ostream& out, const CsvTable& table) {
  auto write_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& r : table.rows) write_row(r);
}

void WriteCsvFile(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteCsv(out, table);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

ActivityLog ActivityFromRow(const CsvTable& t, std::size_t row) {
  const std::size_t md = t.Require(kActivityColumns[0]);
  const std::size_t mm = t.Require(kActivityColumns[1]);
  const std::size_t vd = t.Require(kActivityColumns[2]);
  const std::size_t vm = t.Require(kActivityColumns[3]);
  try {
    return ActivityLog::Make(ParseDays(t, row, md), ParseMinutes(t, row, mm),
                             ParseDays(t, row, vd), ParseMinutes(t, row, vm));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidActivity) throw;
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(t.line_numbers[row]) + ": " + e.what());
  }
}

std::vector<SurveyResponse> ResponsesFromTable(const CsvTable& t,
                                               bool require_activity) {
  std::array<std::size_t, kAllVariables.size()> cols{};
  for (Variable v : kAllVariables) {
    cols[static_cast<std::size_t>(v)] = t.Require(VariableName(v));
  }
  bool has_activity = true;
  for (auto c : kActivityColumns) {
    if (require_activity) t.Require(c);
    has_activity = has_activity && t.Find(c).has_value();
  }
  const auto label_col = t.Find("label");

  std::vector<SurveyResponse> out;
  out.reserve(t.rows.size());
  for (std::size_t row = 0; row < t.rows.size(); ++row) {
    SurveyResponse r;
    for (Variable v : kAllVariables) {
      const std::size_t col = cols[static_cast<std::size_t>(v)];
      const std::string& cell = t.rows[row][col];
      const auto idx = ValueFromToken(v, cell);
      if (!idx) CellError(t, row, t.header[col], "unknown value '" + cell + "'");
      SetValueIndex(r, v, *idx);
    }
    if (has_activity) r.activity = ActivityFromRow(t, row);
    if (label_col && !t.rows[row][*label_col].empty()) {
      const std::string& cell = t.rows[row][*label_col];
      const auto label = LabelFromToken(cell);
      if (!label) CellError(t, row, "label", "unknown label '" + cell + "'");
      r.label = *label;
    }
    out.push_back(std::move(r));
  }
  return out;
}

CsvTable ResponsesToTable(std::span<const SurveyResponse> responses) {
  CsvTable t;
  t.header = SplitLine(kCsvHeader);
  std::size_t line = 1;
  for (const auto& r : responses) {
    std::vector<std::string> cells;
    cells.reserve(t.header.size());
    for (Variable v : kAllVariables) {
      cells.emplace_back(ValueToken(v, ValueIndex(r, v)));
    }
    cells.push_back(std::to_string(r.activity.mod_days()));
    cells.push_back(FormatDouble(r.activity.mod_min()));
    cells.push_back(std::to_string(r.activity.vig_days()));
    cells.push_back(FormatDouble(r.activity.vig_min()));
    cells.emplace_back(r.label ? LabelToken(*r.label) : "");
    t.rows.push_back(std::move(cells));
    t.line_numbers.push_back(++line);
  }
  return t;
}

std::vector<SurveyResponse> ReadResponses(const std::string& path) {
  return ResponsesFromTable(ReadCsvFile(path));
}

void WriteResponses(const std::string& path,
                    std::span<const SurveyResponse> responses) {
  WriteCsvFile(path, ResponsesToTable(responses));
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace atrisk

// Copyright 2026 The mcdm-rank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCDM_CSV_HPP_
#define MCDM_CSV_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/error.hpp"
#include "mcdm/text.hpp"

namespace mcdm::csv {

struct Row {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 parser: quoted fields, doubled quotes, CRLF or LF, embedded line
// breaks inside quotes. A UTF-8 BOM at the start is skipped. Blank lines are
// ignored. `source` names the input in error messages.
inline std::vector<Row> Parse(std::string_view text, std::string_view source) {
  std::vector<Row> rows;
  std::size_t pos = 0, line = 1;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  const auto fail = [&](std::size_t at_line, const std::string& what) {
    return ValidationError(std::string(source) + ":" + std::to_string(at_line) + ": malformed CSV: " + what);
  };
  while (pos < text.size()) {
    Row row;
    row.line = line;
    std::string field;
    bool quoted = false, after_quote = false, end_of_record = false;
    while (!end_of_record) {
      if (pos >= text.size()) {
        if (quoted) throw fail(row.line, "unterminated quoted field");
        end_of_record = true;
        break;
      }
      const char c = text[pos];
      if (quoted) {
        if (c == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            quoted = false;
            after_quote = true;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        continue;
      }
      if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        after_quote = false;
        ++pos;
      } else if (c == '\r' || c == '\n') {
        if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
        ++pos;
        ++line;
        end_of_record = true;
      } else if (c == '"') {
        if (!field.empty() || after_quote) throw fail(line, "stray quote inside unquoted field");
        quoted = true;
        ++pos;
      } else {
        if (after_quote) throw fail(line, "characters after closing quote");
        field.push_back(c);
        ++pos;
      }
    }
    row.fields.push_back(std::move(field));
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string Quote(std::string_view field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string JoinRow(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += Quote(fields[i]);
  }
  out.push_back('\n');
  return out;
}

// Maps the header row to column indices for `expected` names (case-insensitive).
// Missing required columns and field-count mismatches raise errors.
class Header {
 public:
  Header(const std::vector<Row>& rows, std::vector<std::string> required,
         std::vector<std::string> optional, std::string_view source)
      : source_(source) {
    if (rows.empty()) throw ValidationError(source_ + ": empty CSV (no header)");
    const auto& names = rows.front().fields;
    width_ = names.size();
    auto find = [&](const std::string& name) -> std::ptrdiff_t {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (SameName(names[i], name)) return static_cast<std::ptrdiff_t>(i);
      }
      return -1;
    };
    for (const auto& name : required) {
      const auto idx = find(name);
      if (idx < 0) throw ValidationError(source_ + ":1: missing column '" + name + "'");
      columns_.emplace_back(name, idx);
    }
    for (const auto& name : optional) columns_.emplace_back(name, find(name));
  }

  void CheckWidth(const Row& row) const {
    if (row.fields.size() != width_) {
      throw ValidationError(source_ + ":" + std::to_string(row.line) + ": malformed CSV: expected " +
                            std::to_string(width_) + " fields, got " + std::to_string(row.fields.size()));
    }
  }

  bool Has(std::string_view name) const {
    for (const auto& [n, idx] : columns_) {
      if (n == name) return idx >= 0;
    }
    return false;
  }

  // Trimmed value of column `name`, or "" if the optional column is absent.
  std::string Get(const Row& row, std::string_view name) const {
    for (const auto& [n, idx] : columns_) {
      if (n == name) return idx >= 0 ? Trim(row.fields[static_cast<std::size_t>(idx)]) : std::string();
    }
    return {};
  }

  // Untrimmed value, for free text.
  std::string Raw(const Row& row, std::string_view name) const {
    for (const auto& [n, idx] : columns_) {
      if (n == name) return idx >= 0 ? row.fields[static_cast<std::size_t>(idx)] : std::string();
    }
    return {};
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::size_t width_ = 0;
  std::vector<std::pair<std::string, std::ptrdiff_t>> columns_;
};

}  // namespace mcdm::csv

#endif  // MCDM_CSV_HPP_

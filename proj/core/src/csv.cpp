// Copyright 2026 The empath Authors
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

#include "empath/csv.hpp"

namespace empath::csv {

namespace {

bool needs_quoting(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

}  // namespace

Table parse(std::string_view text, std::vector<Diagnostic>& diagnostics) {
  Table table;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;
  std::size_t line = 1;
  std::size_t record_start_line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    // a record of one empty unquoted field is a blank line; skip it
    if (record.size() == 1 && record[0].empty() && !record_has_content) {
      record.clear();
    } else if (table.header.empty()) {
      table.header = std::move(record);
      record.clear();
    } else {
      table.rows.push_back(std::move(record));
      table.row_lines.push_back(record_start_line);
      record.clear();
    }
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !field_was_quoted) {
          in_quotes = true;
          field_was_quoted = true;
          record_has_content = true;
        } else {
          diagnostics.push_back(make_error(
              DiagCode::MalformedRow, "stray quote inside unquoted field", line));
          field += c;
        }
        break;
      case ',':
        end_field();
        record_has_content = true;
        break;
      case '\r':
        // swallowed; the following \n (if any) terminates the record
        break;
      case '\n':
        end_record();
        ++line;
        record_start_line = line;
        break;
      default:
        field += c;
        record_has_content = true;
        break;
    }
  }

  if (in_quotes) {
    diagnostics.push_back(make_error(DiagCode::MalformedRow,
                                     "unterminated quoted field at end of input",
                                     record_start_line));
  }
  if (!field.empty() || record.size() > 0 || record_has_content) {
    end_record();  // final record without trailing newline
  }
  return table;
}

std::string escape(std::string_view field) {
  if (!needs_quoting(field)) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string serialize_row(const std::vector<std::string>& fields) {
  // a lone empty field would read back as a blank line; quote it
  if (fields.size() == 1 && fields[0].empty()) return "\"\"\n";
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out += ',';
    out += escape(fields[i]);
  }
  out += '\n';
  return out;
}

std::string serialize(const Table& table) {
  std::string out = serialize_row(table.header);
  for (const auto& row : table.rows) out += serialize_row(row);
  return out;
}

}  // namespace empath::csv

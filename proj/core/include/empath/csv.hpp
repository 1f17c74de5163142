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

#ifndef EMPATH_CSV_HPP
#define EMPATH_CSV_HPP

#include "empath/diagnostics.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace empath::csv {

// RFC 4180 subset: comma separated, double-quote quoting with "" escapes,
// LF or CRLF line endings, UTF-8 passed through untouched.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // may be ragged; callers check widths

  // 1-based line number of data row `i` in the source text (header is line 1
  // unless preceded by blank lines). Quoted fields may span lines, so this is
  // tracked during parsing rather than recomputed.
  std::vector<std::size_t> row_lines;
};

// Total over any input; structural problems (unterminated quote, stray quote
// in an unquoted field) are reported through `diagnostics`.
Table parse(std::string_view text, std::vector<Diagnostic>& diagnostics);

std::string escape(std::string_view field);
std::string serialize_row(const std::vector<std::string>& fields);
std::string serialize(const Table& table);

}  // namespace empath::csv

#endif  // EMPATH_CSV_HPP

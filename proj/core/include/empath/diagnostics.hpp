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

#ifndef EMPATH_DIAGNOSTICS_HPP
#define EMPATH_DIAGNOSTICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace empath {

enum class Severity { Warning, Error };

enum class DiagCode {
  // dataset parsing
  MissingColumn,
  UnexpectedColumn,
  MalformedRow,
  OutOfRangeScore,
  DuplicateRespondentId,
  UnknownDemographicValue,
  // PPS parsing
  UnknownItemId,
  DuplicateItem,
  UnknownPersonaName,
  MissingSelectedPersona,
  ConflictingSelection,
  IgnoredSelectedPersona,
  IncompleteItemSet,
  AudienceMismatch,
  // run config
  MalformedConfig,
  EmptyNamePool,
  UnknownScoringMode,
  UnknownConfigKey,
  // computation / pipeline
  EmptyInput,
  NoItemsAnswered,
  UnknownMemberId,
  GroupEmpty,
  EmptyPersonaSet,
  MissingItemStats,
  MissingArtifact,
};

std::string_view diag_code_name(DiagCode code);

// A located parse/validation finding. `row` is the 1-based line number in the
// source document (0 when not applicable); `column` is the column name.
struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::MalformedRow;
  std::string message;
  std::size_t row = 0;
  std::string column;

  std::string to_string() const;
};

Diagnostic make_error(DiagCode code, std::string message, std::size_t row = 0,
                      std::string column = {});
Diagnostic make_warning(DiagCode code, std::string message, std::size_t row = 0,
                        std::string column = {});

std::size_t count_errors(const std::vector<Diagnostic>& diagnostics);
std::size_t count_warnings(const std::vector<Diagnostic>& diagnostics);

// Thrown by computational operations whose preconditions do not hold
// (for example aggregating an empty map list). Parsing never throws; it
// collects Diagnostics instead.
class Error : public std::runtime_error {
 public:
  Error(DiagCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  DiagCode code() const { return code_; }

 private:
  DiagCode code_;
};

}  // namespace empath

#endif  // EMPATH_DIAGNOSTICS_HPP

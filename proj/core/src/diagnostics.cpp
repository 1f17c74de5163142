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

#include "empath/diagnostics.hpp"

#include <algorithm>

namespace empath {

std::string_view diag_code_name(DiagCode code) {
  switch (code) {
    case DiagCode::MissingColumn:
      return "missing_column";
    case DiagCode::UnexpectedColumn:
      return "unexpected_column";
    case DiagCode::MalformedRow:
      return "malformed_row";
    case DiagCode::OutOfRangeScore:
      return "out_of_range_score";
    case DiagCode::DuplicateRespondentId:
      return "duplicate_respondent_id";
    case DiagCode::UnknownDemographicValue:
      return "unknown_demographic_value";
    case DiagCode::UnknownItemId:
      return "unknown_item_id";
    case DiagCode::DuplicateItem:
      return "duplicate_item";
    case DiagCode::UnknownPersonaName:
      return "unknown_persona_name";
    case DiagCode::MissingSelectedPersona:
      return "missing_selected_persona";
    case DiagCode::ConflictingSelection:
      return "conflicting_selection";
    case DiagCode::IgnoredSelectedPersona:
      return "ignored_selected_persona";
    case DiagCode::IncompleteItemSet:
      return "incomplete_item_set";
    case DiagCode::AudienceMismatch:
      return "audience_mismatch";
    case DiagCode::MalformedConfig:
      return "malformed_config";
    case DiagCode::EmptyNamePool:
      return "empty_name_pool";
    case DiagCode::UnknownScoringMode:
      return "unknown_scoring_mode";
    case DiagCode::UnknownConfigKey:
      return "unknown_config_key";
    case DiagCode::EmptyInput:
      return "empty_input";
    case DiagCode::NoItemsAnswered:
      return "no_items_answered";
    case DiagCode::UnknownMemberId:
      return "unknown_member_id";
    case DiagCode::GroupEmpty:
      return "group_empty";
    case DiagCode::EmptyPersonaSet:
      return "empty_persona_set";
    case DiagCode::MissingItemStats:
      return "missing_item_stats";
    case DiagCode::MissingArtifact:
      return "missing_artifact";
  }
  return "unknown";
}

std::string Diagnostic::to_string() const {
  std::string out(severity == Severity::Error ? "error" : "warning");
  out += " [";
  out += diag_code_name(code);
  out += "]";
  if (row != 0) {
    out += " row ";
    out += std::to_string(row);
  }
  if (!column.empty()) {
    out += row != 0 ? ", column " : " column ";
    out += column;
  }
  out += ": ";
  out += message;
  return out;
}

Diagnostic make_error(DiagCode code, std::string message, std::size_t row,
                      std::string column) {
  return Diagnostic{Severity::Error, code, std::move(message), row, std::move(column)};
}

Diagnostic make_warning(DiagCode code, std::string message, std::size_t row,
                        std::string column) {
  return Diagnostic{Severity::Warning, code, std::move(message), row, std::move(column)};
}

std::size_t count_errors(const std::vector<Diagnostic>& diagnostics) {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

std::size_t count_warnings(const std::vector<Diagnostic>& diagnostics) {
  return diagnostics.size() - count_errors(diagnostics);
}

}  // namespace empath

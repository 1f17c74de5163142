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

#include "empath/ingest.hpp"

#include "empath/csv.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace empath {

namespace {

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// Column index by header name, or npos.
std::size_t find_column(const std::vector<std::string>& header, std::string_view name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::string::npos;
}

std::vector<std::string> survey_header(const DemographicSchema& schema) {
  std::vector<std::string> header{"respondent_id"};
  for (const auto& attribute : schema.attributes) header.push_back(attribute.name);
  for (Quadrant q : kQuadrants) {
    header.push_back("q_" + std::string(quadrant_key(q)) + "_1");
    header.push_back("q_" + std::string(quadrant_key(q)) + "_2");
  }
  return header;
}

std::optional<LikertScore> read_score(std::string_view cell, std::size_t line,
                                      const std::string& column,
                                      std::vector<Diagnostic>& diagnostics) {
  const std::optional<int> value = parse_int(cell);
  if (!value.has_value()) {
    diagnostics.push_back(make_error(
        DiagCode::OutOfRangeScore,
        "score '" + std::string(cell) + "' is not an integer in 1..5", line, column));
    return std::nullopt;
  }
  const std::optional<LikertScore> score = LikertScore::checked(*value);
  if (!score.has_value()) {
    diagnostics.push_back(make_error(
        DiagCode::OutOfRangeScore,
        "score '" + std::string(cell) + "' outside 1..5", line, column));
  }
  return score;
}

}  // namespace

SurveyParseResult parse_survey_dataset(std::string_view csv_text,
                                       const DemographicSchema& schema) {
  SurveyParseResult result;
  const csv::Table table = csv::parse(csv_text, result.diagnostics);

  const std::vector<std::string> expected = survey_header(schema);
  std::vector<std::size_t> column_of(expected.size(), std::string::npos);
  bool header_ok = true;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    column_of[i] = find_column(table.header, expected[i]);
    if (column_of[i] == std::string::npos) {
      result.diagnostics.push_back(make_error(
          DiagCode::MissingColumn, "header lacks required column", 1, expected[i]));
      header_ok = false;
    }
  }
  for (const std::string& name : table.header) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      result.diagnostics.push_back(make_warning(
          DiagCode::UnexpectedColumn, "column is not part of the survey schema", 1,
          name));
    }
  }
  if (!header_ok) return result;

  std::unordered_set<std::string_view> seen_ids;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::vector<std::string>& row = table.rows[r];
    const std::size_t line = table.row_lines[r];
    if (row.size() != table.header.size()) {
      result.diagnostics.push_back(make_error(
          DiagCode::MalformedRow,
          "expected " + std::to_string(table.header.size()) + " fields, found " +
              std::to_string(row.size()),
          line));
      continue;
    }

    bool row_ok = true;
    SurveyResponse response;
    response.respondent_id = row[column_of[0]];
    if (response.respondent_id.empty()) {
      result.diagnostics.push_back(make_error(DiagCode::MalformedRow,
                                              "respondent_id is empty", line,
                                              "respondent_id"));
      row_ok = false;
    } else if (!seen_ids.insert(response.respondent_id).second) {
      result.diagnostics.push_back(make_error(
          DiagCode::DuplicateRespondentId,
          "respondent_id '" + response.respondent_id + "' appears more than once",
          line, "respondent_id"));
      row_ok = false;
    }

    response.demographics.reserve(schema.attributes.size());
    for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
      const std::string& cell = row[column_of[1 + a]];
      if (!schema.attributes[a].permits(cell)) {
        result.diagnostics.push_back(make_error(
            DiagCode::UnknownDemographicValue,
            "value '" + cell + "' is not permitted for this attribute", line,
            schema.attributes[a].name));
        row_ok = false;
      }
      response.demographics.push_back(cell);
    }

    const std::size_t answer_base = 1 + schema.attributes.size();
    for (std::size_t q = 0; q < 4; ++q) {
      for (std::size_t pos = 0; pos < 2; ++pos) {
        const std::size_t slot = answer_base + 2 * q + pos;
        const std::optional<LikertScore> score =
            read_score(row[column_of[slot]], line, expected[slot], result.diagnostics);
        if (score.has_value()) {
          response.answers[q][pos] = *score;
        } else {
          row_ok = false;
        }
      }
    }

    if (row_ok) result.responses.push_back(std::move(response));
  }

  // a duplicate id invalidates the dataset but the earlier row is kept in the
  // parsed output so downstream reporting can still show it
  return result;
}

std::string write_survey_csv(std::span<const SurveyResponse> responses,
                             const DemographicSchema& schema) {
  csv::Table table;
  table.header = survey_header(schema);
  table.rows.reserve(responses.size());
  for (const SurveyResponse& response : responses) {
    std::vector<std::string> row;
    row.reserve(table.header.size());
    row.push_back(response.respondent_id);
    for (const std::string& value : response.demographics) row.push_back(value);
    for (std::size_t q = 0; q < 4; ++q) {
      for (std::size_t pos = 0; pos < 2; ++pos) {
        row.push_back(std::to_string(response.answers[q][pos].value()));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return csv::serialize(table);
}

PpsParseResult parse_pps_dataset(
    std::string_view csv_text, const PpsInstrument& instrument,
    const std::optional<std::vector<std::string>>& persona_names,
    bool allow_missing_items) {
  PpsParseResult result;
  const csv::Table table = csv::parse(csv_text, result.diagnostics);

  static constexpr const char* kColumns[] = {"participant_id", "audience",
                                             "selected_persona", "item_id", "score"};
  std::size_t column_of[5];
  bool header_ok = true;
  for (std::size_t i = 0; i < 5; ++i) {
    column_of[i] = find_column(table.header, kColumns[i]);
    if (column_of[i] == std::string::npos) {
      result.diagnostics.push_back(make_error(
          DiagCode::MissingColumn, "header lacks required column", 1, kColumns[i]));
      header_ok = false;
    }
  }
  if (!header_ok) return result;

  struct ParticipantAccumulator {
    PpsResponse response;
    std::size_t first_line = 0;
    bool valid = true;
    bool selection_warned = false;
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, ParticipantAccumulator> participants;

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::vector<std::string>& row = table.rows[r];
    const std::size_t line = table.row_lines[r];
    if (row.size() != table.header.size()) {
      result.diagnostics.push_back(make_error(
          DiagCode::MalformedRow,
          "expected " + std::to_string(table.header.size()) + " fields, found " +
              std::to_string(row.size()),
          line));
      continue;
    }

    const std::string& participant_id = row[column_of[0]];
    if (participant_id.empty()) {
      result.diagnostics.push_back(make_error(
          DiagCode::MalformedRow, "participant_id is empty", line, "participant_id"));
      continue;
    }

    auto [it, inserted] = participants.try_emplace(participant_id);
    ParticipantAccumulator& acc = it->second;
    if (inserted) {
      order.push_back(participant_id);
      acc.response.participant_id = participant_id;
      acc.response.audience = instrument.audience;
      acc.first_line = line;
    }

    const std::optional<Audience> audience = parse_audience(row[column_of[1]]);
    if (!audience.has_value() || *audience != instrument.audience) {
      result.diagnostics.push_back(make_error(
          DiagCode::AudienceMismatch,
          "audience '" + row[column_of[1]] + "' does not match the '" +
              std::string(audience_key(instrument.audience)) + "' instrument",
          line, "audience"));
      acc.valid = false;
    }

    const std::string& selected = row[column_of[2]];
    if (instrument.audience == Audience::User) {
      if (!selected.empty()) {
        if (acc.response.selected_persona.has_value() &&
            *acc.response.selected_persona != selected) {
          result.diagnostics.push_back(make_error(
              DiagCode::ConflictingSelection,
              "participant '" + participant_id + "' selects both '" +
                  *acc.response.selected_persona + "' and '" + selected + "'",
              line, "selected_persona"));
          acc.valid = false;
        } else {
          acc.response.selected_persona = selected;
        }
      }
    } else if (!selected.empty() && !acc.selection_warned) {
      result.diagnostics.push_back(make_warning(
          DiagCode::IgnoredSelectedPersona,
          "designer responses evaluate the persona set as a whole; selection ignored",
          line, "selected_persona"));
      acc.selection_warned = true;
    }

    const std::string& item_id = row[column_of[3]];
    if (instrument.find(item_id) == nullptr) {
      result.diagnostics.push_back(make_error(
          DiagCode::UnknownItemId,
          "item '" + item_id + "' is not part of the instrument", line, "item_id"));
      acc.valid = false;
      continue;
    }
    if (acc.response.score_for(item_id) != nullptr) {
      result.diagnostics.push_back(make_error(
          DiagCode::DuplicateItem,
          "participant '" + participant_id + "' already scored item '" + item_id + "'",
          line, "item_id"));
      acc.valid = false;
      continue;
    }
    const std::optional<LikertScore> score =
        read_score(row[column_of[4]], line, "score", result.diagnostics);
    if (!score.has_value()) {
      acc.valid = false;
      continue;
    }
    acc.response.scores.emplace_back(item_id, *score);
  }

  for (const std::string& participant_id : order) {
    ParticipantAccumulator& acc = participants.at(participant_id);

    if (instrument.audience == Audience::User) {
      if (!acc.response.selected_persona.has_value()) {
        result.diagnostics.push_back(make_error(
            DiagCode::MissingSelectedPersona,
            "user participant '" + participant_id + "' selected no persona",
            acc.first_line, "selected_persona"));
        acc.valid = false;
      } else if (persona_names.has_value() &&
                 std::find(persona_names->begin(), persona_names->end(),
                           *acc.response.selected_persona) == persona_names->end()) {
        result.diagnostics.push_back(make_error(
            DiagCode::UnknownPersonaName,
            "selected persona '" + *acc.response.selected_persona +
                "' does not exist",
            acc.first_line, "selected_persona"));
        acc.valid = false;
      }
    } else {
      acc.response.selected_persona.reset();
    }

    if (!allow_missing_items &&
        acc.response.scores.size() != instrument.items.size()) {
      std::string missing;
      for (const InstrumentItem& item : instrument.items) {
        if (acc.response.score_for(item.id) == nullptr) {
          if (!missing.empty()) missing += ", ";
          missing += item.id;
        }
      }
      result.diagnostics.push_back(make_error(
          DiagCode::IncompleteItemSet,
          "participant '" + participant_id + "' is missing items: " + missing,
          acc.first_line));
      acc.valid = false;
    }
    if (acc.response.scores.empty()) acc.valid = false;

    if (acc.valid) {
      // normalize score order to the instrument's item order
      std::vector<std::pair<std::string, LikertScore>> ordered;
      ordered.reserve(acc.response.scores.size());
      for (const InstrumentItem& item : instrument.items) {
        if (const LikertScore* score = acc.response.score_for(item.id)) {
          ordered.emplace_back(item.id, *score);
        }
      }
      acc.response.scores = std::move(ordered);
      result.responses.push_back(std::move(acc.response));
    }
  }
  return result;
}

std::string write_pps_csv(std::span<const PpsResponse> responses) {
  csv::Table table;
  table.header = {"participant_id", "audience", "selected_persona", "item_id", "score"};
  for (const PpsResponse& response : responses) {
    for (const auto& [item_id, score] : response.scores) {
      table.rows.push_back({response.participant_id,
                            std::string(audience_key(response.audience)),
                            response.selected_persona.value_or(""), item_id,
                            std::to_string(score.value())});
    }
  }
  return csv::serialize(table);
}

}  // namespace empath

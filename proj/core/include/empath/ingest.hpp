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

#ifndef EMPATH_INGEST_HPP
#define EMPATH_INGEST_HPP

#include "empath/diagnostics.hpp"
#include "empath/instrument.hpp"
#include "empath/survey.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace empath {

// Survey CSV columns: respondent_id, one column per schema attribute, then
// q_<quadrant>_<1|2> for the eight answers. Column order in the file is
// free; serialization emits the canonical order above.

struct SurveyParseResult {
  std::vector<SurveyResponse> responses;  // file order; only fully valid rows
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return count_errors(diagnostics) == 0; }
};

SurveyParseResult parse_survey_dataset(std::string_view csv_text,
                                       const DemographicSchema& schema);

std::string write_survey_csv(std::span<const SurveyResponse> responses,
                             const DemographicSchema& schema);

// PPS CSV is long format: participant_id, audience, selected_persona,
// item_id, score — one row per answered item.

struct PpsParseResult {
  std::vector<PpsResponse> responses;  // participant first-appearance order
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return count_errors(diagnostics) == 0; }
};

// `persona_names` is the allowlist for user selections; pass std::nullopt to
// skip that check (e.g. when validating PPS files before personas exist).
// With `allow_missing_items` false every participant must cover the
// instrument's item set exactly.
PpsParseResult parse_pps_dataset(
    std::string_view csv_text, const PpsInstrument& instrument,
    const std::optional<std::vector<std::string>>& persona_names,
    bool allow_missing_items = false);

std::string write_pps_csv(std::span<const PpsResponse> responses);

}  // namespace empath

#endif  // EMPATH_INGEST_HPP

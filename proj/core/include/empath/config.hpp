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

#ifndef EMPATH_CONFIG_HPP
#define EMPATH_CONFIG_HPP

#include "empath/diagnostics.hpp"
#include "empath/instrument.hpp"
#include "empath/narratives.hpp"
#include "empath/survey.hpp"
#include "empath/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace empath {

enum class CardFormat { Markdown, Html, Json };

std::string_view card_format_key(CardFormat f);  // "markdown" / "html" / "json"
std::optional<CardFormat> parse_card_format(std::string_view key);

struct RunConfig {
  DemographicSchema schema;
  ScoringMode scoring = ScoringMode::Literal;
  std::vector<std::string> name_pool;
  std::string output_dir = "out";
  std::vector<CardFormat> report_formats;  // card formats to emit
  bool allow_missing_items = false;        // strict PPS item sets by default
  bool per_persona_breakdown = false;      // extension, off by default
  NarrativeTable narratives;
  PpsInstrument user_instrument;
  PpsInstrument designer_instrument;
};

// All defaults: literal scoring, strict item sets, the five stock persona
// names, default schema/narratives/instruments, markdown+html+json cards.
RunConfig default_run_config();

std::vector<std::string> default_name_pool();

struct ConfigLoadResult {
  RunConfig config;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return count_errors(diagnostics) == 0; }
};

// Parses the JSON run-config document. An empty (or whitespace-only) document
// yields all defaults. See docs/config.md for the schema.
ConfigLoadResult load_run_config(std::string_view json_text);

}  // namespace empath

#endif  // EMPATH_CONFIG_HPP

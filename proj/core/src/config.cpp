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

#include "empath/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace empath {

using json = nlohmann::json;

std::string_view card_format_key(CardFormat f) {
  switch (f) {
    case CardFormat::Markdown:
      return "markdown";
    case CardFormat::Html:
      return "html";
    case CardFormat::Json:
      return "json";
  }
  return "markdown";
}

std::optional<CardFormat> parse_card_format(std::string_view key) {
  if (key == "markdown" || key == "md") return CardFormat::Markdown;
  if (key == "html") return CardFormat::Html;
  if (key == "json") return CardFormat::Json;
  return std::nullopt;
}

std::vector<std::string> default_name_pool() {
  return {"Marcos Assis", "Renata Silva", "Mateus Umbelino", "Rodrigo Rodrigues",
          "Felipe Rabelo"};
}

RunConfig default_run_config() {
  RunConfig config;
  config.schema = default_demographic_schema();
  config.scoring = ScoringMode::Literal;
  config.name_pool = default_name_pool();
  config.output_dir = "out";
  config.report_formats = {CardFormat::Markdown, CardFormat::Html, CardFormat::Json};
  config.allow_missing_items = false;
  config.per_persona_breakdown = false;
  config.narratives = default_narratives();
  config.user_instrument = default_user_instrument();
  config.designer_instrument = default_designer_instrument();
  return config;
}

namespace {

constexpr const char* kKnownKeys[] = {
    "scoring_mode", "name_pool",     "output_dir",        "report_formats",
    "demographics", "allow_missing_items", "per_persona_breakdown",
    "narratives",   "instruments",
};

void load_schema(const json& node, RunConfig& config,
                 std::vector<Diagnostic>& diagnostics) {
  if (!node.is_array()) {
    diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                     "'demographics' must be an array", 0,
                                     "demographics"));
    return;
  }
  DemographicSchema schema;
  std::set<std::string> names;
  for (const json& entry : node) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("values") ||
        !entry["name"].is_string() || !entry["values"].is_array()) {
      diagnostics.push_back(make_error(
          DiagCode::MalformedConfig,
          "each demographic needs a 'name' string and a 'values' array", 0,
          "demographics"));
      return;
    }
    DemographicAttribute attribute;
    attribute.name = entry["name"].get<std::string>();
    if (!names.insert(attribute.name).second) {
      diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                       "duplicate demographic attribute '" +
                                           attribute.name + "'",
                                       0, "demographics"));
      return;
    }
    std::set<std::string> seen_values;
    for (const json& value : entry["values"]) {
      if (!value.is_string()) {
        diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                         "demographic values must be strings", 0,
                                         attribute.name));
        return;
      }
      std::string v = value.get<std::string>();
      if (!seen_values.insert(v).second) {
        diagnostics.push_back(make_error(
            DiagCode::MalformedConfig,
            "duplicate value '" + v + "' for attribute '" + attribute.name + "'", 0,
            attribute.name));
        return;
      }
      attribute.values.push_back(std::move(v));
    }
    if (attribute.values.empty()) {
      diagnostics.push_back(make_error(
          DiagCode::MalformedConfig,
          "attribute '" + attribute.name + "' needs at least one value", 0,
          attribute.name));
      return;
    }
    schema.attributes.push_back(std::move(attribute));
  }
  config.schema = std::move(schema);
}

void load_narratives(const json& node, RunConfig& config,
                     std::vector<Diagnostic>& diagnostics) {
  if (!node.is_object()) {
    diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                     "'narratives' must be an object", 0,
                                     "narratives"));
    return;
  }
  for (const auto& [key, value] : node.items()) {
    const std::optional<Quadrant> quadrant = parse_quadrant(key);
    if (!quadrant.has_value()) {
      diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                       "unknown quadrant '" + key + "'", 0,
                                       "narratives"));
      return;
    }
    if (!value.is_object()) {
      diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                       "narrative cells must be an object", 0, key));
      return;
    }
    for (const auto& [pol_key, text] : value.items()) {
      const std::optional<Polarity> polarity = parse_polarity(pol_key);
      if (!polarity.has_value() || !text.is_string() ||
          text.get<std::string>().empty()) {
        diagnostics.push_back(make_error(
            DiagCode::MalformedConfig,
            "narrative override for '" + key + "' needs non-empty "
            "'positive'/'negative' strings",
            0, key));
        return;
      }
      config.narratives.at(*quadrant, *polarity) = text.get<std::string>();
    }
  }
}

void load_instrument(const json& node, Audience audience, PpsInstrument& instrument,
                     std::vector<Diagnostic>& diagnostics) {
  if (!node.is_array() || node.empty()) {
    diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                     "instrument must be a non-empty item array", 0,
                                     "instruments"));
    return;
  }
  PpsInstrument loaded;
  loaded.audience = audience;
  std::set<std::string> ids;
  for (const json& entry : node) {
    if (!entry.is_object() || !entry.contains("id") || !entry.contains("construct") ||
        !entry.contains("statement") || !entry["id"].is_string() ||
        !entry["construct"].is_string() || !entry["statement"].is_string()) {
      diagnostics.push_back(make_error(
          DiagCode::MalformedConfig,
          "each instrument item needs 'id', 'construct' and 'statement' strings", 0,
          "instruments"));
      return;
    }
    InstrumentItem item{entry["id"].get<std::string>(),
                        entry["construct"].get<std::string>(),
                        entry["statement"].get<std::string>()};
    if (item.id.empty() || item.construct.empty() || item.statement.empty()) {
      diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                       "instrument item fields must be non-empty", 0,
                                       "instruments"));
      return;
    }
    if (!ids.insert(item.id).second) {
      diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                       "duplicate instrument item '" + item.id + "'",
                                       0, "instruments"));
      return;
    }
    loaded.items.push_back(std::move(item));
  }
  instrument = std::move(loaded);
}

}  // namespace

ConfigLoadResult load_run_config(std::string_view json_text) {
  ConfigLoadResult result;
  result.config = default_run_config();

  const bool blank = json_text.find_first_not_of(" \t\r\n") == std::string_view::npos;
  if (blank) return result;

  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    result.diagnostics.push_back(make_error(
        DiagCode::MalformedConfig, "config must be a JSON object"));
    return result;
  }

  for (const auto& [key, value] : doc.items()) {
    if (std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys),
                     [&key = key](const char* k) { return key == k; }) ==
        std::end(kKnownKeys)) {
      result.diagnostics.push_back(make_warning(
          DiagCode::UnknownConfigKey, "ignoring unknown key '" + key + "'"));
    }
    (void)value;
  }

  if (doc.contains("scoring_mode")) {
    const json& node = doc["scoring_mode"];
    const std::optional<ScoringMode> mode =
        node.is_string() ? parse_scoring_mode(node.get<std::string>()) : std::nullopt;
    if (!mode.has_value()) {
      result.diagnostics.push_back(make_error(
          DiagCode::UnknownScoringMode,
          "scoring_mode must be \"literal\" or \"reverse_coded\"", 0, "scoring_mode"));
    } else {
      result.config.scoring = *mode;
    }
  }

  if (doc.contains("name_pool")) {
    const json& node = doc["name_pool"];
    if (!node.is_array() ||
        !std::all_of(node.begin(), node.end(),
                     [](const json& v) { return v.is_string(); })) {
      result.diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                              "'name_pool' must be a string array", 0,
                                              "name_pool"));
    } else if (node.empty()) {
      result.diagnostics.push_back(make_error(
          DiagCode::EmptyNamePool, "name pool must not be empty", 0, "name_pool"));
    } else {
      std::vector<std::string> pool = node.get<std::vector<std::string>>();
      std::set<std::string> unique(pool.begin(), pool.end());
      if (unique.size() != pool.size()) {
        result.diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                                "persona names must be unique", 0,
                                                "name_pool"));
      } else {
        result.config.name_pool = std::move(pool);
      }
    }
  }

  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string() || doc["output_dir"].get<std::string>().empty()) {
      result.diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                              "'output_dir' must be a non-empty string",
                                              0, "output_dir"));
    } else {
      result.config.output_dir = doc["output_dir"].get<std::string>();
    }
  }

  if (doc.contains("report_formats")) {
    const json& node = doc["report_formats"];
    std::vector<CardFormat> formats;
    bool ok = node.is_array() && !node.empty();
    if (ok) {
      for (const json& value : node) {
        const std::optional<CardFormat> format =
            value.is_string() ? parse_card_format(value.get<std::string>())
                              : std::nullopt;
        if (!format.has_value()) {
          ok = false;
          break;
        }
        if (std::find(formats.begin(), formats.end(), *format) == formats.end()) {
          formats.push_back(*format);
        }
      }
    }
    if (!ok) {
      result.diagnostics.push_back(make_error(
          DiagCode::MalformedConfig,
          "'report_formats' must be a non-empty array over markdown|html|json", 0,
          "report_formats"));
    } else {
      result.config.report_formats = std::move(formats);
    }
  }

  if (doc.contains("demographics")) {
    load_schema(doc["demographics"], result.config, result.diagnostics);
  }

  if (doc.contains("allow_missing_items")) {
    if (!doc["allow_missing_items"].is_boolean()) {
      result.diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                              "'allow_missing_items' must be a boolean",
                                              0, "allow_missing_items"));
    } else {
      result.config.allow_missing_items = doc["allow_missing_items"].get<bool>();
    }
  }

  if (doc.contains("per_persona_breakdown")) {
    if (!doc["per_persona_breakdown"].is_boolean()) {
      result.diagnostics.push_back(
          make_error(DiagCode::MalformedConfig,
                     "'per_persona_breakdown' must be a boolean", 0,
                     "per_persona_breakdown"));
    } else {
      result.config.per_persona_breakdown = doc["per_persona_breakdown"].get<bool>();
    }
  }

  if (doc.contains("narratives")) {
    load_narratives(doc["narratives"], result.config, result.diagnostics);
  }

  if (doc.contains("instruments")) {
    const json& node = doc["instruments"];
    if (!node.is_object()) {
      result.diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                              "'instruments' must be an object", 0,
                                              "instruments"));
    } else {
      for (const auto& [key, value] : node.items()) {
        if (key == "user") {
          load_instrument(value, Audience::User, result.config.user_instrument,
                          result.diagnostics);
        } else if (key == "designer") {
          load_instrument(value, Audience::Designer, result.config.designer_instrument,
                          result.diagnostics);
        } else {
          result.diagnostics.push_back(make_error(
              DiagCode::MalformedConfig,
              "instrument audience must be 'user' or 'designer'", 0, "instruments"));
        }
      }
    }
  }

  return result;
}

}  // namespace empath

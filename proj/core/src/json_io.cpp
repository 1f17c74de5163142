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

#include "empath/json_io.hpp"

#include <json.hpp>

namespace empath {

using ojson = nlohmann::ordered_json;

namespace {

ojson construct_stats_to_json(const ConstructStats& stats) {
  ojson node;
  node["construct"] = stats.construct;
  node["n"] = stats.n;
  node["mean"] = stats.mean;
  if (stats.degenerate) {
    node["sd"] = nullptr;
    node["ci95"] = nullptr;
    node["degenerate"] = true;
  } else {
    node["sd"] = stats.sd;
    node["ci95"] = ojson::array({stats.ci_lo, stats.ci_hi});
    node["degenerate"] = false;
  }
  return node;
}

ojson boxplot_to_json(const BoxplotStats& stats) {
  ojson node;
  node["item_id"] = stats.item_id;
  node["n"] = stats.n;
  node["min"] = stats.min;
  node["q1"] = stats.q1;
  node["median"] = stats.median;
  node["q3"] = stats.q3;
  node["max"] = stats.max;
  node["whisker_low"] = stats.whisker_low;
  node["whisker_high"] = stats.whisker_high;
  node["outliers"] = stats.outliers;
  return node;
}

ojson persona_to_json_node(const Persona& persona) {
  ojson node;
  node["name"] = persona.name;
  node["signature"] = persona.signature.to_string();
  node["size"] = persona.size;
  node["fraction_num"] = persona.fraction.num;
  node["fraction_den"] = persona.fraction.den;
  ojson demographics = ojson::object();
  for (const auto& [attribute, value] : persona.demographics) {
    demographics[attribute] = value;
  }
  node["demographics"] = std::move(demographics);
  node["narratives"] = persona.narratives;
  node["avatar"] = persona.avatar;
  return node;
}

}  // namespace

namespace {

void append_json_string(std::string& out, std::string_view text) {
  out += '"';
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
        break;
    }
  }
  out += '"';
}

}  // namespace

// Emitted by hand: the dump can run to hundreds of thousands of entries and a
// DOM round trip is an order of magnitude slower.
std::string empathy_maps_to_json(std::span<const EmpathyMap> maps, ScoringMode mode) {
  std::string out;
  out.reserve(64 + maps.size() * 420);
  out += "{\n  \"scoring_mode\": \"";
  out += scoring_mode_key(mode);
  out += "\",\n  \"respondents\": [";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const EmpathyMap& map = maps[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\n      \"respondent_id\": ";
    append_json_string(out, map.respondent_id);
    out += ",\n      \"quadrants\": {";
    for (std::size_t q = 0; q < map.scores.size(); ++q) {
      const QuadrantScore& score = map.scores[q];
      out += q == 0 ? "\n" : ",\n";
      out += "        \"";
      out += quadrant_key(score.kind);
      out += "\": {\n          \"raw\": \"";
      out += score.raw.to_string();
      out += "\",\n          \"polarity\": \"";
      out += polarity_key(score.polarity);
      out += "\"\n        }";
    }
    out += "\n      },\n      \"signature\": \"";
    out += signature(map).to_string();
    out += "\"\n    }";
  }
  out += maps.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string personas_to_json(std::span<const Persona> personas) {
  ojson doc = ojson::array();
  for (const Persona& persona : personas) {
    doc.push_back(persona_to_json_node(persona));
  }
  return doc.dump(2) + "\n";
}

std::string persona_to_json(const Persona& persona) {
  return persona_to_json_node(persona).dump(2) + "\n";
}

PersonaLoadResult personas_from_json(std::string_view json_text) {
  PersonaLoadResult result;
  ojson doc = ojson::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_array()) {
    result.diagnostics.push_back(make_error(
        DiagCode::MalformedConfig, "personas document must be a JSON array"));
    return result;
  }
  for (const ojson& node : doc) {
    const bool shape_ok =
        node.is_object() && node.contains("name") && node["name"].is_string() &&
        node.contains("signature") && node["signature"].is_string() &&
        node.contains("size") && node["size"].is_number_unsigned() &&
        node.contains("fraction_num") && node["fraction_num"].is_number_integer() &&
        node.contains("fraction_den") && node["fraction_den"].is_number_integer() &&
        node.contains("demographics") && node["demographics"].is_object() &&
        node.contains("narratives") && node["narratives"].is_array() &&
        node["narratives"].size() == 4 && node.contains("avatar") &&
        node["avatar"].is_string();
    if (!shape_ok) {
      result.diagnostics.push_back(make_error(
          DiagCode::MalformedConfig, "persona entry has an unexpected shape"));
      return result;
    }
    Persona persona;
    persona.name = node["name"].get<std::string>();
    const std::optional<MapSignature> sig =
        MapSignature::parse(node["signature"].get<std::string>());
    if (!sig.has_value()) {
      result.diagnostics.push_back(make_error(
          DiagCode::MalformedConfig,
          "invalid signature '" + node["signature"].get<std::string>() + "'"));
      return result;
    }
    persona.signature = *sig;
    persona.size = node["size"].get<std::size_t>();
    persona.fraction.num = node["fraction_num"].get<std::int64_t>();
    persona.fraction.den = node["fraction_den"].get<std::int64_t>();
    if (persona.fraction.den <= 0 || persona.fraction.num <= 0 ||
        persona.fraction.num > persona.fraction.den) {
      result.diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                              "persona fraction must lie in (0,1]"));
      return result;
    }
    for (const auto& [attribute, value] : node["demographics"].items()) {
      if (!value.is_string()) {
        result.diagnostics.push_back(make_error(
            DiagCode::MalformedConfig, "demographic values must be strings"));
        return result;
      }
      persona.demographics.emplace_back(attribute, value.get<std::string>());
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (!node["narratives"][i].is_string()) {
        result.diagnostics.push_back(make_error(DiagCode::MalformedConfig,
                                                "narratives must be strings"));
        return result;
      }
      persona.narratives[i] = node["narratives"][i].get<std::string>();
    }
    persona.avatar = node["avatar"].get<std::string>();
    result.personas.push_back(std::move(persona));
  }

  // duplicate names break selection counting downstream
  for (std::size_t i = 0; i < result.personas.size(); ++i) {
    for (std::size_t j = i + 1; j < result.personas.size(); ++j) {
      if (result.personas[i].name == result.personas[j].name) {
        result.diagnostics.push_back(make_error(
            DiagCode::MalformedConfig,
            "duplicate persona name '" + result.personas[i].name + "'"));
        return result;
      }
    }
  }
  return result;
}

namespace {

bool construct_stats_from_node(const ojson& node, ConstructStats& stats) {
  if (!node.is_object() || !node.contains("construct") ||
      !node["construct"].is_string() || !node.contains("n") ||
      !node["n"].is_number_unsigned() || !node.contains("mean") ||
      !node["mean"].is_number() || !node.contains("degenerate") ||
      !node["degenerate"].is_boolean()) {
    return false;
  }
  stats.construct = node["construct"].get<std::string>();
  stats.n = node["n"].get<std::size_t>();
  stats.mean = node["mean"].get<double>();
  stats.degenerate = node["degenerate"].get<bool>();
  if (stats.degenerate) {
    stats.sd = 0.0;
    stats.ci_lo = stats.mean;
    stats.ci_hi = stats.mean;
    return true;
  }
  if (!node.contains("sd") || !node["sd"].is_number() || !node.contains("ci95") ||
      !node["ci95"].is_array() || node["ci95"].size() != 2 ||
      !node["ci95"][0].is_number() || !node["ci95"][1].is_number()) {
    return false;
  }
  stats.sd = node["sd"].get<double>();
  stats.ci_lo = node["ci95"][0].get<double>();
  stats.ci_hi = node["ci95"][1].get<double>();
  return true;
}

bool boxplot_from_node(const ojson& node, BoxplotStats& stats) {
  static constexpr const char* kNumbers[] = {
      "min", "q1", "median", "q3", "max", "whisker_low", "whisker_high"};
  if (!node.is_object() || !node.contains("item_id") ||
      !node["item_id"].is_string() || !node.contains("n") ||
      !node["n"].is_number_unsigned() || !node.contains("outliers") ||
      !node["outliers"].is_array()) {
    return false;
  }
  for (const char* key : kNumbers) {
    if (!node.contains(key) || !node[key].is_number()) return false;
  }
  stats.item_id = node["item_id"].get<std::string>();
  stats.n = node["n"].get<std::size_t>();
  stats.min = node["min"].get<double>();
  stats.q1 = node["q1"].get<double>();
  stats.median = node["median"].get<double>();
  stats.q3 = node["q3"].get<double>();
  stats.max = node["max"].get<double>();
  stats.whisker_low = node["whisker_low"].get<double>();
  stats.whisker_high = node["whisker_high"].get<double>();
  for (const ojson& value : node["outliers"]) {
    if (!value.is_number()) return false;
    stats.outliers.push_back(value.get<double>());
  }
  return true;
}

}  // namespace

StatsLoadResult stats_from_json(std::string_view json_text) {
  StatsLoadResult result;
  const auto fail = [&result](const std::string& message) {
    result.diagnostics.push_back(make_error(DiagCode::MalformedConfig, message));
    return result;
  };

  ojson doc = ojson::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("audiences") ||
      !doc["audiences"].is_object()) {
    return fail("stats document must be an object with an 'audiences' block");
  }
  for (const auto& [key, block] : doc["audiences"].items()) {
    const std::optional<Audience> audience = parse_audience(key);
    if (!audience.has_value()) return fail("unknown audience '" + key + "'");
    if (!block.is_object() || !block.contains("n") ||
        !block["n"].is_number_unsigned() || !block.contains("constructs") ||
        !block["constructs"].is_array() || !block.contains("overall") ||
        !block.contains("items") || !block["items"].is_array()) {
      return fail("audience block '" + key + "' has an unexpected shape");
    }
    AudienceStats stats;
    stats.audience = *audience;
    stats.n = block["n"].get<std::size_t>();
    for (const ojson& node : block["constructs"]) {
      ConstructStats cs;
      if (!construct_stats_from_node(node, cs)) {
        return fail("malformed construct stats in audience '" + key + "'");
      }
      stats.constructs.push_back(std::move(cs));
    }
    if (!construct_stats_from_node(block["overall"], stats.overall)) {
      return fail("malformed overall stats in audience '" + key + "'");
    }
    for (const ojson& node : block["items"]) {
      BoxplotStats bs;
      if (!boxplot_from_node(node, bs)) {
        return fail("malformed item stats in audience '" + key + "'");
      }
      stats.items.push_back(std::move(bs));
    }
    if (block.contains("selections")) {
      if (!block["selections"].is_object()) {
        return fail("malformed selections in audience '" + key + "'");
      }
      SelectionDistribution selections;
      for (const auto& [name, count] : block["selections"].items()) {
        if (!count.is_number_unsigned()) {
          return fail("selection counts must be non-negative integers");
        }
        selections.counts.emplace_back(name, count.get<std::size_t>());
      }
      stats.selections = std::move(selections);
    }
    if (block.contains("per_persona") && block["per_persona"].is_object() &&
        block["per_persona"].contains("overall_by_persona") &&
        block["per_persona"]["overall_by_persona"].is_object()) {
      for (const auto& [name, node] : block["per_persona"]["overall_by_persona"].items()) {
        ConstructStats cs;
        if (!construct_stats_from_node(node, cs)) {
          return fail("malformed per-persona stats in audience '" + key + "'");
        }
        stats.per_persona_overall.emplace_back(name, std::move(cs));
      }
    }
    result.audiences.push_back(std::move(stats));
  }
  return result;
}

std::string stats_to_json(std::span<const AudienceStats> audiences) {
  ojson doc;
  ojson blocks = ojson::object();
  for (const AudienceStats& audience : audiences) {
    ojson block;
    block["n"] = audience.n;
    ojson constructs = ojson::array();
    for (const ConstructStats& stats : audience.constructs) {
      constructs.push_back(construct_stats_to_json(stats));
    }
    block["constructs"] = std::move(constructs);
    block["overall"] = construct_stats_to_json(audience.overall);
    ojson items = ojson::array();
    for (const BoxplotStats& stats : audience.items) {
      items.push_back(boxplot_to_json(stats));
    }
    block["items"] = std::move(items);
    if (audience.selections.has_value()) {
      ojson selections = ojson::object();
      for (const auto& [name, count] : audience.selections->counts) {
        selections[name] = count;
      }
      block["selections"] = std::move(selections);
    }
    if (!audience.per_persona_overall.empty()) {
      ojson breakdown = ojson::object();
      breakdown["note"] = "extension: not part of the published analysis";
      ojson per = ojson::object();
      for (const auto& [name, stats] : audience.per_persona_overall) {
        per[name] = construct_stats_to_json(stats);
      }
      breakdown["overall_by_persona"] = std::move(per);
      block["per_persona"] = std::move(breakdown);
    }
    blocks[std::string(audience_key(audience.audience))] = std::move(block);
  }
  doc["audiences"] = std::move(blocks);
  return doc.dump(2) + "\n";
}

}  // namespace empath

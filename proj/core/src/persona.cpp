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

#include "empath/persona.hpp"

#include "empath/diagnostics.hpp"

#include <cctype>
#include <vector>

namespace empath {

SurveyIndex index_responses(std::span<const SurveyResponse> responses) {
  SurveyIndex index;
  index.reserve(responses.size());
  for (const SurveyResponse& response : responses) {
    index.emplace(response.respondent_id, &response);
  }
  return index;
}

std::vector<std::pair<std::string, std::string>> modal_demographics(
    const PersonaGroup& group, const SurveyIndex& responses,
    const DemographicSchema& schema) {
  if (group.member_ids.empty()) {
    throw Error(DiagCode::GroupEmpty, "modal_demographics: group has no members");
  }
  std::vector<const SurveyResponse*> members;
  members.reserve(group.member_ids.size());
  for (const std::string& id : group.member_ids) {
    auto it = responses.find(id);
    if (it == responses.end()) {
      throw Error(DiagCode::UnknownMemberId,
                  "modal_demographics: unknown respondent '" + id + "'");
    }
    members.push_back(it->second);
  }

  std::vector<std::pair<std::string, std::string>> result;
  result.reserve(schema.attributes.size());
  for (std::size_t attr = 0; attr < schema.attributes.size(); ++attr) {
    const DemographicAttribute& attribute = schema.attributes[attr];
    // counts indexed by declared value order; ties resolve to the earliest
    std::vector<std::size_t> counts(attribute.values.size(), 0);
    for (const SurveyResponse* member : members) {
      if (attr >= member->demographics.size() ||
          !attribute.permits(member->demographics[attr])) {
        throw Error(DiagCode::UnknownDemographicValue,
                    "modal_demographics: respondent '" + member->respondent_id +
                        "' does not match the schema for '" + attribute.name + "'");
      }
      ++counts[attribute.rank(member->demographics[attr])];
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < counts.size(); ++i) {
      if (counts[i] > counts[best]) best = i;
    }
    result.emplace_back(attribute.name, attribute.values[best]);
  }
  return result;
}

const std::string& quadrant_narrative(Quadrant kind, Polarity polarity,
                                      const NarrativeTable& table) {
  return table.at(kind, polarity);
}

std::string initials(std::string_view name) {
  std::string out;
  bool at_token_start = true;
  for (std::size_t i = 0; i < name.size();) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if (std::isspace(c)) {
      at_token_start = true;
      ++i;
      continue;
    }
    std::size_t char_len = 1;
    if ((c & 0x80U) != 0) {  // UTF-8 lead byte
      if ((c & 0xE0U) == 0xC0U) char_len = 2;
      else if ((c & 0xF0U) == 0xE0U) char_len = 3;
      else if ((c & 0xF8U) == 0xF0U) char_len = 4;
    }
    if (at_token_start) {
      if (char_len == 1) {
        out += static_cast<char>(std::toupper(c));
      } else {
        out += name.substr(i, char_len);
      }
      at_token_start = false;
    }
    i += char_len;
  }
  return out;
}

std::vector<Persona> synthesize(std::span<const PersonaGroup> groups,
                                std::span<const SurveyResponse> responses,
                                const RunConfig& config) {
  const SurveyIndex index = index_responses(responses);
  std::vector<Persona> personas;
  personas.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const PersonaGroup& group = groups[i];
    Persona persona;
    persona.name = i < config.name_pool.size()
                       ? config.name_pool[i]
                       : "Persona " + std::to_string(group.signature.value());
    persona.demographics = modal_demographics(group, index, config.schema);
    for (std::size_t q = 0; q < 4; ++q) {
      persona.narratives[q] = quadrant_narrative(
          kQuadrants[q], group.signature.polarity(kQuadrants[q]), config.narratives);
    }
    persona.signature = group.signature;
    persona.size = group.size();
    persona.fraction = group.fraction;
    persona.avatar = initials(persona.name);
    personas.push_back(std::move(persona));
  }
  return personas;
}

}  // namespace empath

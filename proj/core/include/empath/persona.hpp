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

#ifndef EMPATH_PERSONA_HPP
#define EMPATH_PERSONA_HPP

#include "empath/config.hpp"
#include "empath/empathy.hpp"
#include "empath/narratives.hpp"
#include "empath/survey.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace empath {

struct Persona {
  std::string name;
  // (attribute, modal value) pairs in schema order.
  std::vector<std::pair<std::string, std::string>> demographics;
  std::array<std::string, 4> narratives;  // canonical quadrant order
  MapSignature signature;
  std::size_t size = 0;
  Fraction fraction;
  std::string avatar;  // initials badge
};

using SurveyIndex = std::unordered_map<std::string_view, const SurveyResponse*>;

SurveyIndex index_responses(std::span<const SurveyResponse> responses);

// Per attribute, the most frequent value among group members; ties go to the
// value listed earliest in the schema. Throws Error(GroupEmpty) /
// Error(UnknownMemberId).
std::vector<std::pair<std::string, std::string>> modal_demographics(
    const PersonaGroup& group, const SurveyIndex& responses,
    const DemographicSchema& schema);

const std::string& quadrant_narrative(Quadrant kind, Polarity polarity,
                                      const NarrativeTable& table);

// First character of each name token, upper-cased ("Marcos Assis" -> "MA").
std::string initials(std::string_view name);

// One persona per group, in group order. Names come from the config pool in
// order; groups beyond the pool get "Persona <signature value>".
std::vector<Persona> synthesize(std::span<const PersonaGroup> groups,
                                std::span<const SurveyResponse> responses,
                                const RunConfig& config);

}  // namespace empath

#endif  // EMPATH_PERSONA_HPP

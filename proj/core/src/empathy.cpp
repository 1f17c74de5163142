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

#include "empath/empathy.hpp"

#include "empath/diagnostics.hpp"

#include <algorithm>
#include <array>

namespace empath {

MapSignature MapSignature::from_polarities(const std::array<Polarity, 4>& polarities) {
  std::uint8_t bits = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    bits = static_cast<std::uint8_t>(bits << 1);
    if (polarities[i] == Polarity::Positive) bits |= 1;
  }
  return MapSignature(bits);
}

Polarity MapSignature::polarity(Quadrant q) const {
  const int shift = 3 - static_cast<int>(q);
  return ((bits_ >> shift) & 1) != 0 ? Polarity::Positive : Polarity::Negative;
}

std::array<Polarity, 4> MapSignature::polarities() const {
  std::array<Polarity, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = polarity(kQuadrants[i]);
  return out;
}

std::string MapSignature::to_string() const {
  std::string out(4, 'N');
  for (std::size_t i = 0; i < 4; ++i) {
    if (polarity(kQuadrants[i]) == Polarity::Positive) out[i] = 'P';
  }
  return out;
}

std::optional<MapSignature> MapSignature::parse(std::string_view text) {
  if (text.size() != 4) return std::nullopt;
  std::array<Polarity, 4> polarities{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (text[i] == 'P') {
      polarities[i] = Polarity::Positive;
    } else if (text[i] == 'N') {
      polarities[i] = Polarity::Negative;
    } else {
      return std::nullopt;
    }
  }
  return from_polarities(polarities);
}

RawScore raw_score(Quadrant kind, LikertScore a1, LikertScore a2, ScoringMode mode) {
  if (mode == ScoringMode::ReverseCoded) {
    // average with the second answer flipped on the scale: (a1 + (6 - a2)) / 2
    return RawScore::from_halves(a1.value() + (6 - a2.value()));
  }
  if (kind == Quadrant::Does) {
    return RawScore::from_halves(a1.value() + a2.value());
  }
  // contradictory pair: first Table-style statement minus the second
  return RawScore::from_integer(a1.value() - a2.value());
}

Polarity classify(RawScore raw) {
  return raw.twice >= 5 ? Polarity::Positive : Polarity::Negative;
}

Polarity classify(double raw) {
  return raw >= 2.5 ? Polarity::Positive : Polarity::Negative;
}

EmpathyMap build_map(const SurveyResponse& response, ScoringMode mode) {
  EmpathyMap map;
  map.respondent_id = response.respondent_id;
  for (std::size_t i = 0; i < 4; ++i) {
    const Quadrant q = kQuadrants[i];
    const RawScore raw = raw_score(q, response.answer(q, 1), response.answer(q, 2), mode);
    map.scores[i] = QuadrantScore{q, raw, classify(raw)};
  }
  return map;
}

MapSignature signature(const EmpathyMap& map) {
  std::array<Polarity, 4> polarities{};
  for (std::size_t i = 0; i < 4; ++i) polarities[i] = map.scores[i].polarity;
  return MapSignature::from_polarities(polarities);
}

std::vector<PersonaGroup> aggregate(std::span<const EmpathyMap> maps) {
  if (maps.empty()) {
    throw Error(DiagCode::EmptyInput, "aggregate: no empathy maps");
  }
  std::array<std::vector<std::string>, 16> members;
  for (const EmpathyMap& map : maps) {
    members[signature(map).value()].push_back(map.respondent_id);
  }
  const auto total = static_cast<std::int64_t>(maps.size());
  std::vector<PersonaGroup> groups;
  for (std::uint8_t bits = 0; bits < 16; ++bits) {
    if (members[bits].empty()) continue;
    PersonaGroup group;
    group.signature = MapSignature(bits);
    group.member_ids = std::move(members[bits]);
    group.fraction = Fraction{static_cast<std::int64_t>(group.member_ids.size()), total};
    groups.push_back(std::move(group));
  }
  std::sort(groups.begin(), groups.end(), [](const PersonaGroup& a, const PersonaGroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.signature.value() < b.signature.value();
  });
  return groups;
}

}  // namespace empath

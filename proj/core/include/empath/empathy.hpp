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

#ifndef EMPATH_EMPATHY_HPP
#define EMPATH_EMPATHY_HPP

#include "empath/survey.hpp"
#include "empath/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace empath {

struct QuadrantScore {
  Quadrant kind = Quadrant::Does;
  RawScore raw;
  Polarity polarity = Polarity::Negative;
};

struct EmpathyMap {
  std::string respondent_id;
  std::array<QuadrantScore, 4> scores;  // canonical quadrant order

  const QuadrantScore& at(Quadrant q) const {
    return scores[static_cast<std::size_t>(q)];
  }
};

// The 4-bit polarity vector identifying an empathy-map equivalence class.
// Big-endian over the canonical quadrant order: Does is the highest bit,
// Positive = 1, so "PPPP" == 15 and "PNNN" == 8. Sixteen values exist.
class MapSignature {
 public:
  MapSignature() = default;
  explicit MapSignature(std::uint8_t bits) : bits_(bits & 0x0f) {}

  static MapSignature from_polarities(const std::array<Polarity, 4>& polarities);

  std::uint8_t value() const { return bits_; }
  Polarity polarity(Quadrant q) const;
  std::array<Polarity, 4> polarities() const;

  std::string to_string() const;  // e.g. "PNNP"
  static std::optional<MapSignature> parse(std::string_view text);

  auto operator<=>(const MapSignature&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

// Respondents sharing one signature. `member_ids` keeps input order;
// `fraction` is the exact share of all respondents.
struct PersonaGroup {
  MapSignature signature;
  std::vector<std::string> member_ids;
  Fraction fraction;

  std::size_t size() const { return member_ids.size(); }
};

// Literal mode: Does averages its answer pair, the other quadrants subtract
// the second answer from the first. Reverse-coded mode averages the pair with
// the second answer flipped on the scale; it is a diagnostic alternative, not
// the default.
RawScore raw_score(Quadrant kind, LikertScore a1, LikertScore a2, ScoringMode mode);

// Positive iff raw >= 2.5 (exact; no floating point involved).
Polarity classify(RawScore raw);
// Convenience overload for pre-computed real scores.
Polarity classify(double raw);

EmpathyMap build_map(const SurveyResponse& response, ScoringMode mode);

MapSignature signature(const EmpathyMap& map);

// Groups identical signatures. Result sorted by size descending, ties by
// signature value ascending. Throws Error(EmptyInput) on an empty list.
std::vector<PersonaGroup> aggregate(std::span<const EmpathyMap> maps);

}  // namespace empath

#endif  // EMPATH_EMPATHY_HPP

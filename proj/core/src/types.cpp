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

#include "empath/types.hpp"

#include <charconv>

namespace empath {

std::string_view quadrant_key(Quadrant q) {
  switch (q) {
    case Quadrant::Does:
      return "does";
    case Quadrant::Thinks:
      return "thinks";
    case Quadrant::Feels:
      return "feels";
    case Quadrant::Says:
      return "says";
  }
  return "does";
}

std::string_view quadrant_label(Quadrant q) {
  switch (q) {
    case Quadrant::Does:
      return "Does";
    case Quadrant::Thinks:
      return "Thinks";
    case Quadrant::Feels:
      return "Feels";
    case Quadrant::Says:
      return "Says";
  }
  return "Does";
}

std::optional<Quadrant> parse_quadrant(std::string_view key) {
  for (Quadrant q : kQuadrants) {
    if (key == quadrant_key(q)) return q;
  }
  return std::nullopt;
}

std::string_view polarity_key(Polarity p) {
  return p == Polarity::Positive ? "positive" : "negative";
}

std::optional<Polarity> parse_polarity(std::string_view key) {
  if (key == "positive") return Polarity::Positive;
  if (key == "negative") return Polarity::Negative;
  return std::nullopt;
}

std::string_view scoring_mode_key(ScoringMode mode) {
  return mode == ScoringMode::Literal ? "literal" : "reverse_coded";
}

std::optional<ScoringMode> parse_scoring_mode(std::string_view key) {
  if (key == "literal") return ScoringMode::Literal;
  if (key == "reverse_coded") return ScoringMode::ReverseCoded;
  return std::nullopt;
}

std::string RawScore::to_string() const {
  return std::to_string(twice) + "/2";
}

std::optional<RawScore> RawScore::parse(std::string_view text) {
  if (text.size() < 3 || text.substr(text.size() - 2) != "/2") return std::nullopt;
  std::string_view digits = text.substr(0, text.size() - 2);
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return RawScore{value};
}

std::string_view audience_key(Audience a) {
  return a == Audience::User ? "user" : "designer";
}

std::optional<Audience> parse_audience(std::string_view key) {
  if (key == "user") return Audience::User;
  if (key == "designer") return Audience::Designer;
  return std::nullopt;
}

std::string format_percent(Fraction fraction) {
  // round half up in tenths of a percent, integer arithmetic only
  const std::int64_t tenths =
      (2000 * fraction.num + fraction.den) / (2 * fraction.den);
  std::string out = std::to_string(tenths / 10);
  out += '.';
  out += static_cast<char>('0' + tenths % 10);
  out += '%';
  return out;
}

}  // namespace empath

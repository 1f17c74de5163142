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

#ifndef EMPATH_TYPES_HPP
#define EMPATH_TYPES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace empath {

// The four empathy-map quadrants in canonical order. Every per-quadrant
// container in this library is indexed by this order.
enum class Quadrant : std::uint8_t { Does = 0, Thinks = 1, Feels = 2, Says = 3 };

inline constexpr std::array<Quadrant, 4> kQuadrants = {
    Quadrant::Does, Quadrant::Thinks, Quadrant::Feels, Quadrant::Says};

std::string_view quadrant_key(Quadrant q);    // "does", "thinks", ...
std::string_view quadrant_label(Quadrant q);  // "Does", "Thinks", ...
std::optional<Quadrant> parse_quadrant(std::string_view key);

enum class Polarity : std::uint8_t { Negative = 0, Positive = 1 };

std::string_view polarity_key(Polarity p);  // "negative" / "positive"
std::optional<Polarity> parse_polarity(std::string_view key);

// A five-point scale answer. Construction is validated; a LikertScore always
// holds a value in 1..5.
class LikertScore {
 public:
  LikertScore() = default;  // lowest scale point

  static std::optional<LikertScore> checked(int value) {
    if (value < 1 || value > 5) return std::nullopt;
    return LikertScore(value);
  }

  int value() const { return value_; }

  auto operator<=>(const LikertScore&) const = default;

 private:
  explicit LikertScore(int value) : value_(value) {}
  int value_ = 1;
};

enum class ScoringMode { Literal, ReverseCoded };

std::string_view scoring_mode_key(ScoringMode mode);
std::optional<ScoringMode> parse_scoring_mode(std::string_view key);

// Exact quadrant score in half-units. Every score the pipeline produces is a
// multiple of 1/2, so the 2.5 polarity threshold never touches floating
// point.
struct RawScore {
  int twice = 0;  // the score times two

  static RawScore from_halves(int twice) { return RawScore{twice}; }
  static RawScore from_integer(int value) { return RawScore{2 * value}; }

  double value() const { return static_cast<double>(twice) / 2.0; }
  std::string to_string() const;  // rendered as "<twice>/2"
  static std::optional<RawScore> parse(std::string_view text);

  auto operator<=>(const RawScore&) const = default;
};

enum class Audience : std::uint8_t { User = 0, Designer = 1 };

std::string_view audience_key(Audience a);  // "user" / "designer"
std::optional<Audience> parse_audience(std::string_view key);

// Exact share of respondents, kept as a reduced-free integer ratio.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  auto operator<=>(const Fraction&) const = default;
};

// Renders num/den as a percentage with one decimal, round half up:
// Fraction{21, 61} -> "34.4%".
std::string format_percent(Fraction fraction);

}  // namespace empath

#endif  // EMPATH_TYPES_HPP

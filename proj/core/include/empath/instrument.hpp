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

#ifndef EMPATH_INSTRUMENT_HPP
#define EMPATH_INSTRUMENT_HPP

#include "empath/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace empath {

// The six persona-perception constructs measured by the default instruments.
// Instrument items carry the construct as a string so that custom instruments
// may introduce further constructs (e.g. consistency, willingness) without
// touching this enum.
enum class Construct : std::uint8_t {
  Similarity = 0,
  Empathy = 1,
  Likability = 2,
  Credibility = 3,
  Completeness = 4,
  Clarity = 5,
};

std::string_view construct_key(Construct c);    // "similarity", ...
std::optional<Construct> parse_construct(std::string_view key);

// "similarity" -> "Similarity"; unknown constructs get their first character
// upper-cased.
std::string construct_display_name(std::string_view construct);

struct InstrumentItem {
  std::string id;
  std::string construct;  // lowercase key
  std::string statement;
};

// A perception questionnaire for one audience: an ordered item list grouped
// by construct.
struct PpsInstrument {
  Audience audience = Audience::User;
  std::vector<InstrumentItem> items;

  const InstrumentItem* find(std::string_view item_id) const;
  // Distinct constructs in first-appearance order.
  std::vector<std::string> construct_order() const;
  std::vector<const InstrumentItem*> items_in(std::string_view construct) const;
};

// The default 11-item user instrument: similarity x4, empathy x3,
// likability x4.
PpsInstrument default_user_instrument();

// The default 12-item designer instrument: credibility x4, completeness x4,
// clarity x4.
PpsInstrument default_designer_instrument();

// One evaluation participant's answers. `scores` is normalized to instrument
// item order by the parser.
struct PpsResponse {
  std::string participant_id;
  Audience audience = Audience::User;
  std::optional<std::string> selected_persona;  // required for users
  std::vector<std::pair<std::string, LikertScore>> scores;  // (item_id, score)

  const LikertScore* score_for(std::string_view item_id) const;
};

}  // namespace empath

#endif  // EMPATH_INSTRUMENT_HPP

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

#include "empath/instrument.hpp"

#include <algorithm>
#include <cctype>

namespace empath {

std::string_view construct_key(Construct c) {
  switch (c) {
    case Construct::Similarity:
      return "similarity";
    case Construct::Empathy:
      return "empathy";
    case Construct::Likability:
      return "likability";
    case Construct::Credibility:
      return "credibility";
    case Construct::Completeness:
      return "completeness";
    case Construct::Clarity:
      return "clarity";
  }
  return "similarity";
}

std::optional<Construct> parse_construct(std::string_view key) {
  for (auto c : {Construct::Similarity, Construct::Empathy, Construct::Likability,
                 Construct::Credibility, Construct::Completeness, Construct::Clarity}) {
    if (key == construct_key(c)) return c;
  }
  return std::nullopt;
}

std::string construct_display_name(std::string_view construct) {
  std::string out(construct);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

const InstrumentItem* PpsInstrument::find(std::string_view item_id) const {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const InstrumentItem& i) { return i.id == item_id; });
  return it == items.end() ? nullptr : &*it;
}

std::vector<std::string> PpsInstrument::construct_order() const {
  std::vector<std::string> order;
  for (const auto& item : items) {
    if (std::find(order.begin(), order.end(), item.construct) == order.end()) {
      order.push_back(item.construct);
    }
  }
  return order;
}

std::vector<const InstrumentItem*> PpsInstrument::items_in(
    std::string_view construct) const {
  std::vector<const InstrumentItem*> out;
  for (const auto& item : items) {
    if (item.construct == construct) out.push_back(&item);
  }
  return out;
}

PpsInstrument default_user_instrument() {
  PpsInstrument instrument;
  instrument.audience = Audience::User;
  instrument.items = {
      {"similarity_1", "similarity", "This persona feels similar to myself."},
      {"similarity_2", "similarity", "The persona and I think alike."},
      {"similarity_3", "similarity", "The persona and I share similar interests."},
      {"similarity_4", "similarity",
       "I believe I would agree with this persona on most matters."},
      {"empathy_1", "empathy", "I feel like I understand this persona."},
      {"empathy_2", "empathy", "I feel strong ties to this persona."},
      {"empathy_3", "empathy", "I can imagine a day in the life of this persona."},
      {"likability_1", "likability", "I find this persona likable."},
      {"likability_2", "likability", "I could be friends with this persona."},
      {"likability_3", "likability", "This persona is interesting."},
      {"likability_4", "likability",
       "This persona feels like someone I could spend time with."},
  };
  return instrument;
}

PpsInstrument default_designer_instrument() {
  PpsInstrument instrument;
  instrument.audience = Audience::Designer;
  instrument.items = {
      {"credibility_1", "credibility", "Those personas seem like real people."},
      {"credibility_2", "credibility", "I have met people like those personas."},
      {"credibility_3", "credibility",
       "The picture of those personas looks authentic."},
      {"credibility_4", "credibility",
       "Those personas seem to have a personality."},
      {"completeness_1", "completeness",
       "Those personas profiles are detailed enough to make decisions about the "
       "customers they describe."},
      {"completeness_2", "completeness", "Those personas profiles seem complete."},
      {"completeness_3", "completeness",
       "Those personas profiles provide enough information to understand the "
       "people they describe."},
      {"completeness_4", "completeness",
       "Those personas profiles are not missing vital information."},
      {"clarity_1", "clarity", "The information about the personas is well presented."},
      {"clarity_2", "clarity",
       "The text in the persona's profile is clear enough to read."},
      {"clarity_3", "clarity",
       "The information in the persona's profile is easy to understand."},
      {"clarity_4", "clarity", "Those personas are memorable."},
  };
  return instrument;
}

const LikertScore* PpsResponse::score_for(std::string_view item_id) const {
  for (const auto& [id, score] : scores) {
    if (id == item_id) return &score;
  }
  return nullptr;
}

}  // namespace empath

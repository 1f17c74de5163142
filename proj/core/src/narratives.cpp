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

#include "empath/narratives.hpp"

namespace empath {

bool NarrativeTable::complete() const {
  for (const auto& row : cells) {
    for (const auto& cell : row) {
      if (cell.empty()) return false;
    }
  }
  return true;
}

NarrativeTable default_narratives() {
  NarrativeTable table;
  table.at(Quadrant::Does, Polarity::Positive) =
      "Tends to follow the recommendation provided by the software.";
  table.at(Quadrant::Does, Polarity::Negative) =
      "Tends not to follow the recommendation, makes his decisions alone.";
  table.at(Quadrant::Thinks, Polarity::Positive) =
      "Tends to believe that systems should explain its recommendations.";
  table.at(Quadrant::Thinks, Polarity::Negative) =
      "Tends not to care about software explanations of its recommendations.";
  table.at(Quadrant::Feels, Polarity::Positive) =
      "Feels more comfortable following a well-explained recommendation.";
  table.at(Quadrant::Feels, Polarity::Negative) =
      "A well-explained recommendation does not change his decision to follow it.";
  table.at(Quadrant::Says, Polarity::Positive) =
      "Says that explanations must be provided to users who are interested.";
  table.at(Quadrant::Says, Polarity::Negative) =
      "It says that explanations should not be obligatorily provided.";
  return table;
}

}  // namespace empath

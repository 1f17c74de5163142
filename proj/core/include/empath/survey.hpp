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

#ifndef EMPATH_SURVEY_HPP
#define EMPATH_SURVEY_HPP

#include "empath/types.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace empath {

// One categorical demographic attribute. The declared value order doubles as
// the tie-breaking order when taking modes.
struct DemographicAttribute {
  std::string name;
  std::vector<std::string> values;

  bool permits(std::string_view value) const;
  // Index of `value` in the declared order, or values.size() if absent.
  std::size_t rank(std::string_view value) const;
};

struct DemographicSchema {
  std::vector<DemographicAttribute> attributes;

  const DemographicAttribute* find(std::string_view name) const;
};

// Numeric attributes such as age must be pre-binned into categories; modes
// over raw numbers are degenerate.
DemographicSchema default_demographic_schema();

// One survey respondent: demographics aligned with the schema's attribute
// order plus the eight Likert answers, two per quadrant.
struct SurveyResponse {
  std::string respondent_id;
  std::vector<std::string> demographics;         // schema.attributes order
  std::array<std::array<LikertScore, 2>, 4> answers;  // [quadrant][position]

  LikertScore answer(Quadrant q, int position) const {
    return answers[static_cast<std::size_t>(q)][static_cast<std::size_t>(position - 1)];
  }
};

}  // namespace empath

#endif  // EMPATH_SURVEY_HPP

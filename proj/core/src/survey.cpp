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

#include "empath/survey.hpp"

#include <algorithm>

namespace empath {

bool DemographicAttribute::permits(std::string_view value) const {
  return rank(value) < values.size();
}

std::size_t DemographicAttribute::rank(std::string_view value) const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == value) return i;
  }
  return values.size();
}

const DemographicAttribute* DemographicSchema::find(std::string_view name) const {
  auto it = std::find_if(attributes.begin(), attributes.end(),
                         [&](const DemographicAttribute& a) { return a.name == name; });
  return it == attributes.end() ? nullptr : &*it;
}

DemographicSchema default_demographic_schema() {
  return DemographicSchema{{
      {"age_band", {"18-24", "25-34", "35-44", "45-54", "55-64", "65+"}},
      {"gender", {"F", "M", "non-binary", "prefer-not-to-say"}},
      {"schooling", {"primary", "secondary", "BSc", "MSc", "PhD"}},
  }};
}

}  // namespace empath

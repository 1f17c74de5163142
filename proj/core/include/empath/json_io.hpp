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

#ifndef EMPATH_JSON_IO_HPP
#define EMPATH_JSON_IO_HPP

#include "empath/diagnostics.hpp"
#include "empath/empathy.hpp"
#include "empath/persona.hpp"
#include "empath/pps.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace empath {

// All emitters produce pretty-printed, insertion-ordered JSON so repeated
// runs are byte-identical.

// Audit dump of per-respondent quadrant scores: raw values are exact
// "<twice>/2" strings, never floats.
std::string empathy_maps_to_json(std::span<const EmpathyMap> maps,
                                 ScoringMode mode);

std::string personas_to_json(std::span<const Persona> personas);
std::string persona_to_json(const Persona& persona);

struct PersonaLoadResult {
  std::vector<Persona> personas;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return count_errors(diagnostics) == 0; }
};

// Inverse of personas_to_json; validates signatures, fractions and narrative
// arity.
PersonaLoadResult personas_from_json(std::string_view json_text);

std::string stats_to_json(std::span<const AudienceStats> audiences);

struct StatsLoadResult {
  std::vector<AudienceStats> audiences;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return count_errors(diagnostics) == 0; }
};

// Inverse of stats_to_json; the report stage re-reads the staged artifact
// instead of recomputing statistics.
StatsLoadResult stats_from_json(std::string_view json_text);

}  // namespace empath

#endif  // EMPATH_JSON_IO_HPP

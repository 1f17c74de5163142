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

#include "empath/persona.hpp"

#include "empath/diagnostics.hpp"
#include "empath/ingest.hpp"
#include "empath/json_io.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <numeric>

using namespace empath;

namespace {

LikertScore score_of(int value) {
  auto score = LikertScore::checked(value);
  REQUIRE(score.has_value());
  return *score;
}

SurveyResponse respondent(const std::string& id, const std::string& age,
                          const std::string& gender, const std::string& schooling) {
  SurveyResponse response;
  response.respondent_id = id;
  response.demographics = {age, gender, schooling};
  for (auto& pair : response.answers) {
    pair = {score_of(3), score_of(3)};
  }
  return response;
}

PersonaGroup group_of(std::uint8_t bits, std::vector<std::string> members,
                      std::int64_t total) {
  PersonaGroup group;
  group.signature = MapSignature(bits);
  group.fraction = Fraction{static_cast<std::int64_t>(members.size()), total};
  group.member_ids = std::move(members);
  return group;
}

}  // namespace

TEST_CASE("modal_demographics: strict majority and declared-order ties") {
  const DemographicSchema schema = default_demographic_schema();
  std::vector<SurveyResponse> responses{
      respondent("a", "18-24", "F", "BSc"),
      respondent("b", "25-34", "F", "BSc"),
      respondent("c", "25-34", "M", "MSc"),
  };
  const SurveyIndex index = index_responses(responses);

  SUBCASE("majority wins") {
    const auto mode = modal_demographics(group_of(15, {"a", "b", "c"}, 3), index, schema);
    CHECK(mode[1] == std::pair<std::string, std::string>{"gender", "F"});
    CHECK(mode[0] == std::pair<std::string, std::string>{"age_band", "25-34"});
  }
  SUBCASE("two-way tie goes to the schema's earlier value") {
    const auto mode = modal_demographics(group_of(15, {"a", "c"}, 2), index, schema);
    // F vs M tie: F is declared first
    CHECK(mode[1].second == "F");
    // 18-24 vs 25-34 tie: 18-24 is declared first
    CHECK(mode[0].second == "18-24");
  }
  SUBCASE("unknown member id") {
    CHECK_THROWS_AS(modal_demographics(group_of(15, {"ghost"}, 1), index, schema),
                    Error);
  }
  SUBCASE("empty group is defensive-rejected") {
    CHECK_THROWS_AS(modal_demographics(group_of(15, {}, 1), index, schema), Error);
  }
}

TEST_CASE("quadrant_narrative returns the exact table cell") {
  const NarrativeTable table = default_narratives();
  CHECK(quadrant_narrative(Quadrant::Does, Polarity::Positive, table) ==
        "Tends to follow the recommendation provided by the software.");
  CHECK(quadrant_narrative(Quadrant::Says, Polarity::Negative, table) ==
        "It says that explanations should not be obligatorily provided.");
  CHECK(quadrant_narrative(Quadrant::Feels, Polarity::Positive, table) ==
        "Feels more comfortable following a well-explained recommendation.");
}

TEST_CASE("initials") {
  CHECK(initials("Marcos Assis") == "MA");
  CHECK(initials("Renata Silva") == "RS");
  CHECK(initials("Persona 11") == "P1");
  CHECK(initials("  padded   name ") == "PN");
  CHECK(initials("solo") == "S");
}

TEST_CASE("synthesize names personas from the pool in group order") {
  const std::string csv = empath::testing::survey_csv_61();
  const auto parsed = parse_survey_dataset(csv, default_demographic_schema());
  REQUIRE(parsed.ok());
  std::vector<EmpathyMap> maps;
  for (const auto& response : parsed.responses) {
    maps.push_back(build_map(response, ScoringMode::Literal));
  }
  const auto groups = aggregate(maps);
  const RunConfig config = default_run_config();
  const auto personas = synthesize(groups, parsed.responses, config);

  REQUIRE(personas.size() == 5);
  CHECK(personas[0].name == "Marcos Assis");
  CHECK(personas[1].name == "Renata Silva");
  CHECK(personas[2].name == "Mateus Umbelino");
  CHECK(personas[3].name == "Rodrigo Rodrigues");
  CHECK(personas[4].name == "Felipe Rabelo");
  CHECK(personas[0].size == 21);
  CHECK(personas[0].fraction == Fraction{21, 61});
  CHECK(format_percent(personas[0].fraction) == "34.4%");
  CHECK(personas[0].avatar == "MA");

  // narratives equal the table lookup for the group's signature, cell by cell
  for (const auto& persona : personas) {
    for (std::size_t q = 0; q < 4; ++q) {
      CHECK(persona.narratives[q] ==
            quadrant_narrative(kQuadrants[q],
                               persona.signature.polarity(kQuadrants[q]),
                               config.narratives));
    }
  }

  // fractions sum to exactly one (common denominator 61)
  std::int64_t numerator = 0;
  for (const auto& persona : personas) {
    CHECK(persona.fraction.den == 61);
    numerator += persona.fraction.num;
  }
  CHECK(numerator == 61);
}

TEST_CASE("synthesize: overflow groups get generated names") {
  const std::string csv = empath::testing::survey_csv_16();
  const auto parsed = parse_survey_dataset(csv, default_demographic_schema());
  REQUIRE(parsed.ok());
  std::vector<EmpathyMap> maps;
  for (const auto& response : parsed.responses) {
    maps.push_back(build_map(response, ScoringMode::Literal));
  }
  const auto groups = aggregate(maps);
  REQUIRE(groups.size() == 16);
  const auto personas = synthesize(groups, parsed.responses, default_run_config());
  REQUIRE(personas.size() == 16);
  std::size_t generated = 0;
  for (const auto& persona : personas) {
    if (persona.name.rfind("Persona ", 0) == 0) {
      ++generated;
      CHECK(persona.name ==
            "Persona " + std::to_string(persona.signature.value()));
    }
  }
  CHECK(generated == 11);  // 16 groups, 5 pool names
}

TEST_CASE("synthesize is deterministic byte for byte") {
  const std::string csv = empath::testing::survey_csv_61();
  const auto parsed = parse_survey_dataset(csv, default_demographic_schema());
  REQUIRE(parsed.ok());
  std::vector<EmpathyMap> maps;
  for (const auto& response : parsed.responses) {
    maps.push_back(build_map(response, ScoringMode::Literal));
  }
  const RunConfig config = default_run_config();
  const auto a = personas_to_json(synthesize(aggregate(maps), parsed.responses, config));
  const auto b = personas_to_json(synthesize(aggregate(maps), parsed.responses, config));
  CHECK(a == b);
}

TEST_CASE("demographic changes never touch signatures or narratives") {
  std::vector<SurveyResponse> original{respondent("a", "18-24", "F", "BSc"),
                                       respondent("b", "18-24", "F", "BSc")};
  std::vector<SurveyResponse> relabeled{respondent("a", "65+", "M", "PhD"),
                                        respondent("b", "55-64", "M", "primary")};
  const RunConfig config = default_run_config();
  const auto personas_of = [&](std::vector<SurveyResponse>& responses) {
    std::vector<EmpathyMap> maps;
    for (const auto& response : responses) {
      maps.push_back(build_map(response, ScoringMode::Literal));
    }
    return synthesize(aggregate(maps), responses, config);
  };
  const auto a = personas_of(original);
  const auto b = personas_of(relabeled);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].signature == b[i].signature);
    CHECK(a[i].narratives == b[i].narratives);
    CHECK(a[i].demographics != b[i].demographics);
  }
}

TEST_CASE("format_percent renders one decimal, round half up") {
  CHECK(format_percent(Fraction{21, 61}) == "34.4%");
  CHECK(format_percent(Fraction{14, 61}) == "23.0%");
  CHECK(format_percent(Fraction{11, 61}) == "18.0%");
  CHECK(format_percent(Fraction{10, 61}) == "16.4%");
  CHECK(format_percent(Fraction{5, 61}) == "8.2%");
  CHECK(format_percent(Fraction{1, 1}) == "100.0%");
  CHECK(format_percent(Fraction{1, 3}) == "33.3%");
  CHECK(format_percent(Fraction{1, 16}) == "6.3%");  // 6.25 rounds up
}

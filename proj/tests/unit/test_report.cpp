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

#include "empath/report.hpp"

#include "empath/diagnostics.hpp"
#include "empath/ingest.hpp"
#include "empath/json_io.hpp"
#include "empath/svg.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace empath;

namespace {

// Minimal well-formedness check: tags balance and nest properly, attribute
// values are quoted. Good enough to catch broken emitters.
bool xml_well_formed(std::string_view text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      if (text[i] == '>') return false;
      ++i;
      continue;
    }
    const std::size_t end = text.find('>', i);
    if (end == std::string_view::npos) return false;
    std::string_view tag = text.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return false;
    if (tag.front() == '?') continue;  // declaration
    const bool closing = tag.front() == '/';
    const bool self_closing = tag.back() == '/';
    if (closing) {
      if (stack.empty()) return false;
      if (stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    std::string_view name = tag.substr(0, tag.find_first_of(" \t\n/"));
    // quotes must pair up inside the tag
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (!self_closing) stack.push_back(std::string(name));
  }
  return stack.empty();
}

std::vector<Persona> fixture_personas() {
  const auto parsed = parse_survey_dataset(empath::testing::survey_csv_61(),
                                           default_demographic_schema());
  REQUIRE(parsed.ok());
  std::vector<EmpathyMap> maps;
  for (const auto& response : parsed.responses) {
    maps.push_back(build_map(response, ScoringMode::Literal));
  }
  return synthesize(aggregate(maps), parsed.responses, default_run_config());
}

ConstructStats make_stats(const std::string& construct, double mean, double lo,
                          double hi) {
  ConstructStats stats;
  stats.construct = construct;
  stats.n = 60;
  stats.mean = mean;
  stats.sd = 0.5;
  stats.ci_lo = lo;
  stats.ci_hi = hi;
  return stats;
}

}  // namespace

TEST_CASE("cards carry the narrative sentences and the exact percentage") {
  const auto personas = fixture_personas();
  const Persona& top = personas[0];  // PPPP, 21/61

  const std::string markdown = render_card(top, CardFormat::Markdown);
  CHECK(markdown.find("# Marcos Assis") != std::string::npos);
  CHECK(markdown.find("Tends to follow the recommendation provided by the software.") !=
        std::string::npos);
  CHECK(markdown.find("34.4%") != std::string::npos);
  CHECK(markdown.find("**Does**") != std::string::npos);
  CHECK(markdown.find("**Thinks**") != std::string::npos);
  CHECK(markdown.find("**Feels**") != std::string::npos);
  CHECK(markdown.find("**Says**") != std::string::npos);

  const std::string html = render_card(top, CardFormat::Html);
  CHECK(html.find("<!DOCTYPE html>") == 0);
  CHECK(html.find("34.4%") != std::string::npos);
  CHECK(html.find("MA") != std::string::npos);
}

TEST_CASE("json cards round-trip through the persona schema") {
  const auto personas = fixture_personas();
  const std::string json = render_cards(personas, CardFormat::Json);
  const auto loaded = personas_from_json(json);
  REQUIRE(loaded.ok());
  REQUIRE(loaded.personas.size() == personas.size());
  for (std::size_t i = 0; i < personas.size(); ++i) {
    CHECK(loaded.personas[i].name == personas[i].name);
    CHECK(loaded.personas[i].signature == personas[i].signature);
    CHECK(loaded.personas[i].size == personas[i].size);
    CHECK(loaded.personas[i].fraction == personas[i].fraction);
    CHECK(loaded.personas[i].demographics == personas[i].demographics);
    CHECK(loaded.personas[i].narratives == personas[i].narratives);
    CHECK(loaded.personas[i].avatar == personas[i].avatar);
  }
  // and the reserialization is byte-identical
  CHECK(personas_to_json(loaded.personas) == json);
}

TEST_CASE("render_cards rejects an empty persona set") {
  CHECK_THROWS_AS(render_cards(std::vector<Persona>{}, CardFormat::Markdown), Error);
}

TEST_CASE("persona slugs are filesystem-safe") {
  CHECK(persona_slug("Marcos Assis") == "marcos_assis");
  CHECK(persona_slug("Persona 11") == "persona_11");
  CHECK(persona_slug("  weird -- name!! ") == "weird_name");
  CHECK(persona_slug("") == "persona");
}

TEST_CASE("group chart: bars, labels, determinism") {
  const auto personas = fixture_personas();
  const auto bars = group_bars(std::span<const Persona>(personas));
  const std::string chart = render_group_chart(bars);
  CHECK(xml_well_formed(chart));
  // five bars plus no stray rects
  CHECK(std::count(chart.begin(), chart.end(), '\n') > 10);
  std::size_t rects = 0;
  for (std::size_t pos = chart.find("<rect"); pos != std::string::npos;
       pos = chart.find("<rect", pos + 1)) {
    ++rects;
  }
  CHECK(rects == 5);
  // first bar label carries the count and the exact export percentage
  CHECK(chart.find("21 (34.4%)") != std::string::npos);
  CHECK(chart.find("Marcos Assis") != std::string::npos);

  CHECK(render_group_chart(bars) == chart);  // byte-identical rerender

  const std::string data = group_chart_data_json(bars);
  CHECK(data.find("\"bar_label\": \"21 (34.4%)\"") != std::string::npos);
  CHECK(data.find("\"percent\": \"34.4%\"") != std::string::npos);

  // single group renders one full-width bar at 100%
  std::vector<GroupBar> one{{"Everyone", 7, Fraction{7, 7}}};
  const std::string single = render_group_chart(one);
  CHECK(single.find("7 (100.0%)") != std::string::npos);

  CHECK_THROWS_AS(render_group_chart(std::vector<GroupBar>{}), Error);
}

TEST_CASE("group chart from raw groups uses signature labels") {
  PersonaGroup group;
  group.signature = MapSignature(9);
  group.member_ids = {"a", "b"};
  group.fraction = {2, 2};
  const auto bars = group_bars(std::vector<PersonaGroup>{group});
  REQUIRE(bars.size() == 1);
  CHECK(bars[0].label == "PNNP");
}

TEST_CASE("construct chart: dashed neutral line, clamping, one bar per entry") {
  std::vector<ConstructStats> stats{
      make_stats("similarity", 3.6, 3.4, 3.8),
      make_stats("empathy", 3.2, 3.0, 3.4),
      make_stats("likability", 4.1, 3.9, 4.3),
      make_stats("overall", 3.7, 3.5, 3.9),
  };
  const std::string chart = render_construct_chart(stats, Audience::User);
  CHECK(xml_well_formed(chart));
  CHECK(chart.find("stroke-dasharray") != std::string::npos);
  for (const char* label : {"Similarity", "Empathy", "Likability", "Overall"}) {
    CHECK(chart.find(label) != std::string::npos);
  }
  // mean labels match the export strings exactly
  const std::string data = construct_chart_data_json(stats, Audience::User);
  for (const char* label : {"3.60", "3.20", "4.10", "3.70"}) {
    CHECK(chart.find(label) != std::string::npos);
    CHECK(data.find(label) != std::string::npos);
  }

  // the dashed line sits at the y of score 3: same formula as the ticks
  // (visible via a line using the grid color)
  CHECK(chart.find(">3</text>") != std::string::npos);

  // zero-variance stats draw a zero-length error bar rather than none
  std::vector<ConstructStats> flat{make_stats("overall", 4.0, 4.0, 4.0)};
  const std::string zero = render_construct_chart(flat, Audience::Designer);
  CHECK(xml_well_formed(zero));

  // wildly out-of-scale interval is clamped in the svg but raw in the export
  std::vector<ConstructStats> wide{make_stats("overall", 4.0, -8.7062, 16.7062)};
  const std::string clamped = render_construct_chart(wide, Audience::User);
  CHECK(xml_well_formed(clamped));
  const std::string wide_data = construct_chart_data_json(wide, Audience::User);
  CHECK(wide_data.find("-8.7062") != std::string::npos);
  CHECK(wide_data.find("16.7062") != std::string::npos);
}

TEST_CASE("boxplot chart: one row per item, outlier glyphs, statement labels") {
  const PpsInstrument user = default_user_instrument();
  std::vector<BoxplotStats> items;
  for (const auto& item : user.items) {
    BoxplotStats stats;
    stats.item_id = item.id;
    stats.n = 60;
    stats.min = 1;
    stats.q1 = 3;
    stats.median = 4;
    stats.q3 = 5;
    stats.max = 5;
    stats.whisker_low = 3;
    stats.whisker_high = 5;
    stats.outliers = {1.0};
    items.push_back(std::move(stats));
  }
  const std::string chart = render_boxplot_chart(items, user);
  CHECK(xml_well_formed(chart));
  std::size_t circles = 0;
  for (std::size_t pos = chart.find("<circle"); pos != std::string::npos;
       pos = chart.find("<circle", pos + 1)) {
    ++circles;
  }
  CHECK(circles == 11);  // one outlier point per row
  CHECK(chart.find("This persona feels similar to myself.") != std::string::npos);
  // box from 3 to 5 on a 1..5 axis: x(3)=740, width = x(5)-x(3) = 180
  CHECK(chart.find("<rect x=\"740\" ") != std::string::npos);

  // a missing item is an error, not a silent gap
  items.pop_back();
  CHECK_THROWS_AS(render_boxplot_chart(items, user), Error);
}

TEST_CASE("report bundle covers cards, figures and data mirrors") {
  const auto personas = fixture_personas();
  const auto users = parse_pps_dataset(
      empath::testing::pps_users_csv_60(
          {"Marcos Assis", "Renata Silva", "Mateus Umbelino", "Rodrigo Rodrigues",
           "Felipe Rabelo"}),
      default_user_instrument(),
      std::vector<std::string>{"Marcos Assis", "Renata Silva", "Mateus Umbelino",
                               "Rodrigo Rodrigues", "Felipe Rabelo"},
      false);
  REQUIRE(users.ok());
  const auto designers = parse_pps_dataset(empath::testing::pps_designers_csv_38(),
                                           default_designer_instrument(), std::nullopt,
                                           false);
  REQUIRE(designers.ok());

  std::vector<std::string> names;
  for (const auto& persona : personas) names.push_back(persona.name);
  std::vector<AudienceStats> audiences{
      audience_stats(users.responses, default_user_instrument(), names, false),
      audience_stats(designers.responses, default_designer_instrument(), names, false),
  };

  const RunConfig config = default_run_config();
  const auto bundle =
      build_report_bundle(personas, audiences, config, config.report_formats);

  std::vector<std::string> paths;
  for (const auto& [path, content] : bundle.files) {
    paths.push_back(path.generic_string());
    CHECK_FALSE(content.empty());
  }
  for (const char* expected :
       {"personas/marcos_assis.md", "personas/marcos_assis.html",
        "personas/marcos_assis.json", "personas/personas.md",
        "figures/fig2_groups.svg", "figures/fig3_user_constructs.svg",
        "figures/fig4_designer_constructs.svg", "figures/fig5_user_items.svg",
        "figures/fig6_designer_items.svg", "data/fig2_groups.json",
        "data/fig3_user_constructs.json", "data/fig4_designer_constructs.json",
        "data/fig5_user_items.json", "data/fig6_designer_items.json"}) {
    CHECK(std::find(paths.begin(), paths.end(), expected) != paths.end());
  }
  // 3 formats x (5 personas + combined) + 5 figures + 5 data mirrors
  CHECK(bundle.files.size() == 3 * 6 + 10);

  // json-only leaves no markdown or html cards
  const std::vector<CardFormat> json_only{CardFormat::Json};
  const auto lean = build_report_bundle(personas, audiences, config, json_only);
  for (const auto& [path, content] : lean.files) {
    CHECK(path.extension() != ".md");
    CHECK(path.extension() != ".html");
  }

  // writing the bundle twice produces identical trees
  empath::testing::TempDir a;
  empath::testing::TempDir b;
  write_bundle(bundle, a.path());
  write_bundle(bundle, b.path());
  CHECK(empath::testing::tree_hash(a.path()) == empath::testing::tree_hash(b.path()));
}

TEST_CASE("svg number formatting is deterministic and trimmed") {
  CHECK(svg::number(12.0) == "12");
  CHECK(svg::number(12.5) == "12.5");
  CHECK(svg::number(12.25) == "12.25");
  CHECK(svg::number(12.256) == "12.26");
  CHECK(svg::number(-0.0001) == "0");
  CHECK(svg::number(-3.5) == "-3.5");
  CHECK(svg::escape_text("a<b&c>\"d\"") == "a&lt;b&amp;c&gt;&quot;d&quot;");
}

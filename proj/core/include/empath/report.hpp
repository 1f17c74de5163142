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

#ifndef EMPATH_REPORT_HPP
#define EMPATH_REPORT_HPP

#include "empath/config.hpp"
#include "empath/empathy.hpp"
#include "empath/persona.hpp"
#include "empath/pps.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace empath {

// Chart layout constants. The canvas is fixed; nothing in a chart depends on
// the environment.
inline constexpr double kChartWidth = 960.0;
inline constexpr double kChartHeight = 540.0;
inline constexpr double kChartFontPx = 12.0;
inline constexpr double kItemLabelFontPx = 10.0;

// ---- persona cards --------------------------------------------------------

std::string render_card(const Persona& persona, CardFormat format);

// Combined sheet over all personas. Throws Error(EmptyPersonaSet).
std::string render_cards(std::span<const Persona> personas, CardFormat format);

// Filesystem-safe lowercase name ("Marcos Assis" -> "marcos_assis").
std::string persona_slug(std::string_view name);

// ---- charts ---------------------------------------------------------------

struct GroupBar {
  std::string label;
  std::size_t count = 0;
  Fraction fraction;
};

std::vector<GroupBar> group_bars(std::span<const PersonaGroup> groups);
std::vector<GroupBar> group_bars(std::span<const Persona> personas);

// Horizontal bars, size order, labeled "<count> (<percent>)". Throws
// Error(EmptyInput).
std::string render_group_chart(std::span<const GroupBar> bars);

// Vertical bars per construct plus overall; 95% error bars clamped to the
// scale for display; dashed reference line at the neutral score 3.
std::string render_construct_chart(std::span<const ConstructStats> stats,
                                   Audience audience);

// One box-and-whisker row per instrument item, statements as labels, scale
// 1..5 on the X axis. Throws Error(MissingItemStats) if an item lacks stats.
std::string render_boxplot_chart(std::span<const BoxplotStats> items,
                                 const PpsInstrument& instrument);

// ---- machine-readable chart mirrors ----------------------------------------

std::string group_chart_data_json(std::span<const GroupBar> bars);
std::string construct_chart_data_json(std::span<const ConstructStats> stats,
                                      Audience audience);
std::string boxplot_chart_data_json(std::span<const BoxplotStats> items,
                                    const PpsInstrument& instrument);

// ---- bundle ----------------------------------------------------------------

// Relative path -> content for every file of the report tree:
// personas/*.{md,html,json}, figures/*.svg, data/*.json.
struct ReportBundle {
  std::vector<std::pair<std::filesystem::path, std::string>> files;
};

ReportBundle build_report_bundle(std::span<const Persona> personas,
                                 std::span<const AudienceStats> audiences,
                                 const RunConfig& config,
                                 std::span<const CardFormat> formats);

// Writes every file write-temp-then-rename under `out_dir`, creating
// directories as needed.
void write_bundle(const ReportBundle& bundle,
                  const std::filesystem::path& out_dir);

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace empath

#endif  // EMPATH_REPORT_HPP

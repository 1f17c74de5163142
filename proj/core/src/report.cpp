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
#include "empath/json_io.hpp"
#include "empath/svg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>

namespace empath {

using ojson = nlohmann::ordered_json;

namespace {

// Chart geometry shared by the renderers. Scores always map onto [1, 5].
constexpr double kScaleMin = 1.0;
constexpr double kScaleMax = 5.0;
constexpr double kNeutralScore = 3.0;

constexpr const char* kBarFill = "#4878a8";
constexpr const char* kBoxFill = "#9ecae1";
constexpr const char* kAxisColor = "#333333";
constexpr const char* kGridColor = "#888888";

std::string count_label(const GroupBar& bar) {
  return std::to_string(bar.count) + " (" + format_percent(bar.fraction) + ")";
}

// Two-decimal mean label; the same string goes into the data export so the
// chart never shows a number the export lacks.
std::string mean_label(double mean) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", mean);
  return std::string(buffer);
}

double clamp_scale(double v) { return std::clamp(v, kScaleMin, kScaleMax); }

std::string audience_title(Audience audience, std::string_view suffix) {
  std::string title(audience == Audience::User ? "User" : "Designer");
  title += " ";
  title += suffix;
  return title;
}

ojson construct_node(const ConstructStats& stats) {
  ojson node;
  node["construct"] = stats.construct;
  node["display_name"] = construct_display_name(stats.construct);
  node["n"] = stats.n;
  node["mean"] = stats.mean;
  node["mean_label"] = mean_label(stats.mean);
  if (stats.degenerate) {
    node["sd"] = nullptr;
    node["ci95"] = nullptr;
    node["degenerate"] = true;
  } else {
    node["sd"] = stats.sd;
    node["ci95"] = ojson::array({stats.ci_lo, stats.ci_hi});
    node["degenerate"] = false;
  }
  return node;
}

const BoxplotStats* stats_for_item(std::span<const BoxplotStats> items,
                                   std::string_view item_id) {
  for (const BoxplotStats& stats : items) {
    if (stats.item_id == item_id) return &stats;
  }
  return nullptr;
}

}  // namespace

// ---- persona cards ----------------------------------------------------------

std::string persona_slug(std::string_view name) {
  std::string slug;
  slug.reserve(name.size());
  bool last_was_sep = false;
  for (char c : name) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      slug += static_cast<char>(std::tolower(u));
      last_was_sep = false;
    } else if (!slug.empty() && !last_was_sep) {
      slug += '_';
      last_was_sep = true;
    }
  }
  while (!slug.empty() && slug.back() == '_') slug.pop_back();
  return slug.empty() ? "persona" : slug;
}

namespace {

std::string card_markdown(const Persona& persona) {
  std::string out = "# " + persona.name + "\n\n";
  out += persona.avatar + " | signature " + persona.signature.to_string() + " | " +
         std::to_string(persona.size) + " of " + std::to_string(persona.fraction.den) +
         " respondents (" + format_percent(persona.fraction) + ")\n\n";
  out += "## Demographics\n\n";
  for (const auto& [attribute, value] : persona.demographics) {
    out += "- " + attribute + ": " + value + "\n";
  }
  out += "\n## Empathy map\n\n";
  for (std::size_t q = 0; q < 4; ++q) {
    out += "- **" + std::string(quadrant_label(kQuadrants[q])) + "**: " +
           persona.narratives[q] + "\n";
  }
  return out;
}

std::string html_escape(std::string_view text) { return svg::escape_text(text); }

std::string card_html_body(const Persona& persona) {
  std::string out = "<article class=\"persona-card\">\n";
  out += "  <div class=\"avatar\">" + html_escape(persona.avatar) + "</div>\n";
  out += "  <h1>" + html_escape(persona.name) + "</h1>\n";
  out += "  <p class=\"meta\">signature " + persona.signature.to_string() + " | " +
         std::to_string(persona.size) + " of " + std::to_string(persona.fraction.den) +
         " respondents (" + format_percent(persona.fraction) + ")</p>\n";
  out += "  <h2>Demographics</h2>\n  <dl>\n";
  for (const auto& [attribute, value] : persona.demographics) {
    out += "    <dt>" + html_escape(attribute) + "</dt><dd>" + html_escape(value) +
           "</dd>\n";
  }
  out += "  </dl>\n  <h2>Empathy map</h2>\n  <dl>\n";
  for (std::size_t q = 0; q < 4; ++q) {
    out += "    <dt>" + std::string(quadrant_label(kQuadrants[q])) + "</dt><dd>" +
           html_escape(persona.narratives[q]) + "</dd>\n";
  }
  out += "  </dl>\n</article>\n";
  return out;
}

constexpr const char* kCardCss =
    "body{font-family:sans-serif;margin:2em auto;max-width:40em;color:#222}"
    ".persona-card{border:1px solid #ccc;border-radius:8px;padding:1.5em;"
    "margin-bottom:1.5em}"
    ".avatar{width:3em;height:3em;border-radius:50%;background:#4878a8;color:#fff;"
    "display:flex;align-items:center;justify-content:center;font-weight:bold}"
    ".meta{color:#555}dt{font-weight:bold}dd{margin:0 0 .6em 0}";

std::string html_document(std::string_view title, std::string_view body) {
  std::string out = "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n";
  out += "<meta charset=\"utf-8\">\n<title>" + std::string(html_escape(title)) +
         "</title>\n";
  out += "<style>" + std::string(kCardCss) + "</style>\n</head>\n<body>\n";
  out += body;
  out += "</body>\n</html>\n";
  return out;
}

}  // namespace

std::string render_card(const Persona& persona, CardFormat format) {
  switch (format) {
    case CardFormat::Markdown:
      return card_markdown(persona);
    case CardFormat::Html:
      return html_document(persona.name, card_html_body(persona));
    case CardFormat::Json:
      return persona_to_json(persona);
  }
  return card_markdown(persona);
}

std::string render_cards(std::span<const Persona> personas, CardFormat format) {
  if (personas.empty()) {
    throw Error(DiagCode::EmptyPersonaSet, "render_cards: no personas");
  }
  switch (format) {
    case CardFormat::Markdown: {
      std::string out = "# Personas\n\n";
      for (std::size_t i = 0; i < personas.size(); ++i) {
        if (i != 0) out += "\n---\n\n";
        out += card_markdown(personas[i]);
      }
      return out;
    }
    case CardFormat::Html: {
      std::string body;
      for (const Persona& persona : personas) body += card_html_body(persona);
      return html_document("Personas", body);
    }
    case CardFormat::Json:
      return personas_to_json(personas);
  }
  return personas_to_json(personas);
}

// ---- charts -----------------------------------------------------------------

std::vector<GroupBar> group_bars(std::span<const PersonaGroup> groups) {
  std::vector<GroupBar> bars;
  bars.reserve(groups.size());
  for (const PersonaGroup& group : groups) {
    bars.push_back(GroupBar{group.signature.to_string(), group.size(), group.fraction});
  }
  return bars;
}

std::vector<GroupBar> group_bars(std::span<const Persona> personas) {
  std::vector<GroupBar> bars;
  bars.reserve(personas.size());
  for (const Persona& persona : personas) {
    bars.push_back(GroupBar{persona.name, persona.size, persona.fraction});
  }
  return bars;
}

std::string render_group_chart(std::span<const GroupBar> bars) {
  if (bars.empty()) {
    throw Error(DiagCode::EmptyInput, "render_group_chart: no groups");
  }
  const double left = 230.0;
  const double right = kChartWidth - 140.0;
  const double top = 56.0;
  const double bottom = kChartHeight - 24.0;

  std::size_t max_count = 0;
  for (const GroupBar& bar : bars) max_count = std::max(max_count, bar.count);

  svg::Document doc(kChartWidth, kChartHeight);
  doc.text(kChartWidth / 2.0, 28.0, "Respondents per persona", svg::Anchor::Middle,
           kChartFontPx + 2.0);
  doc.line(left, top, left, bottom, kAxisColor);

  const double row_h = (bottom - top) / static_cast<double>(bars.size());
  const double bar_h = row_h * 0.6;
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const GroupBar& bar = bars[i];
    const double y = top + row_h * static_cast<double>(i) + (row_h - bar_h) / 2.0;
    const double w = max_count == 0
                         ? 0.0
                         : (right - left) * static_cast<double>(bar.count) /
                               static_cast<double>(max_count);
    doc.text(left - 8.0, y + bar_h / 2.0 + kChartFontPx / 3.0, bar.label,
             svg::Anchor::End, kChartFontPx);
    doc.rect(left, y, w, bar_h, kBarFill);
    doc.text(left + w + 6.0, y + bar_h / 2.0 + kChartFontPx / 3.0, count_label(bar),
             svg::Anchor::Start, kChartFontPx);
  }
  return doc.str();
}

std::string render_construct_chart(std::span<const ConstructStats> stats,
                                   Audience audience) {
  const double left = 80.0;
  const double right = kChartWidth - 40.0;
  const double top = 56.0;
  const double bottom = kChartHeight - 60.0;

  const auto y_of = [&](double score) {
    return bottom - (bottom - top) * (score - kScaleMin) / (kScaleMax - kScaleMin);
  };

  svg::Document doc(kChartWidth, kChartHeight);
  doc.text(kChartWidth / 2.0, 28.0, audience_title(audience, "average agreement"),
           svg::Anchor::Middle, kChartFontPx + 2.0);

  // y axis with integer score ticks
  doc.line(left, top, left, bottom, kAxisColor);
  doc.line(left, bottom, right, bottom, kAxisColor);
  for (int score = 1; score <= 5; ++score) {
    const double y = y_of(static_cast<double>(score));
    doc.line(left - 4.0, y, left, y, kAxisColor);
    doc.text(left - 8.0, y + kChartFontPx / 3.0, std::to_string(score),
             svg::Anchor::End, kChartFontPx);
  }
  // neutral "neither agree nor disagree" reference
  doc.line(left, y_of(kNeutralScore), right, y_of(kNeutralScore), kGridColor, 1.0,
           /*dashed=*/true);

  if (stats.empty()) return doc.str();

  const double slot_w = (right - left) / static_cast<double>(stats.size());
  const double bar_w = slot_w * 0.5;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const ConstructStats& s = stats[i];
    const double cx = left + slot_w * (static_cast<double>(i) + 0.5);
    const double mean_y = y_of(clamp_scale(s.mean));
    doc.rect(cx - bar_w / 2.0, mean_y, bar_w, bottom - mean_y, kBarFill);
    doc.text(cx, mean_y - 6.0, mean_label(s.mean), svg::Anchor::Middle, kChartFontPx);
    if (!s.degenerate) {
      // display-clamped 95% interval; exports carry the raw bounds
      const double lo_y = y_of(clamp_scale(s.ci_lo));
      const double hi_y = y_of(clamp_scale(s.ci_hi));
      doc.line(cx, hi_y, cx, lo_y, kAxisColor, 1.5);
      doc.line(cx - 6.0, hi_y, cx + 6.0, hi_y, kAxisColor, 1.5);
      doc.line(cx - 6.0, lo_y, cx + 6.0, lo_y, kAxisColor, 1.5);
    }
    doc.text(cx, bottom + kChartFontPx + 8.0, construct_display_name(s.construct),
             svg::Anchor::Middle, kChartFontPx);
  }
  return doc.str();
}

std::string render_boxplot_chart(std::span<const BoxplotStats> items,
                                 const PpsInstrument& instrument) {
  const double left = 560.0;
  const double right = kChartWidth - 40.0;
  const double top = 56.0;
  const double bottom = kChartHeight - 48.0;

  const auto x_of = [&](double score) {
    return left + (right - left) * (score - kScaleMin) / (kScaleMax - kScaleMin);
  };

  svg::Document doc(kChartWidth, kChartHeight);
  doc.text(kChartWidth / 2.0, 28.0, audience_title(instrument.audience, "responses by item"),
           svg::Anchor::Middle, kChartFontPx + 2.0);
  doc.line(left, bottom, right, bottom, kAxisColor);
  for (int score = 1; score <= 5; ++score) {
    const double x = x_of(static_cast<double>(score));
    doc.line(x, bottom, x, bottom + 4.0, kAxisColor);
    doc.text(x, bottom + kChartFontPx + 6.0, std::to_string(score),
             svg::Anchor::Middle, kChartFontPx);
  }
  doc.text((left + right) / 2.0, kChartHeight - 10.0, "Level of agreement",
           svg::Anchor::Middle, kChartFontPx);

  const double row_h =
      (bottom - top) / static_cast<double>(std::max<std::size_t>(instrument.items.size(), 1));
  const double box_h = std::min(row_h * 0.55, 22.0);
  for (std::size_t i = 0; i < instrument.items.size(); ++i) {
    const InstrumentItem& item = instrument.items[i];
    const BoxplotStats* s = stats_for_item(items, item.id);
    if (s == nullptr) {
      throw Error(DiagCode::MissingItemStats,
                  "render_boxplot_chart: no stats for item '" + item.id + "'");
    }
    const double cy = top + row_h * (static_cast<double>(i) + 0.5);
    doc.text(left - 8.0, cy + kItemLabelFontPx / 3.0, item.statement,
             svg::Anchor::End, kItemLabelFontPx);
    // whiskers, box, median, outlier points
    doc.line(x_of(s->whisker_low), cy, x_of(s->q1), cy, kAxisColor);
    doc.line(x_of(s->q3), cy, x_of(s->whisker_high), cy, kAxisColor);
    doc.line(x_of(s->whisker_low), cy - box_h / 4.0, x_of(s->whisker_low),
             cy + box_h / 4.0, kAxisColor);
    doc.line(x_of(s->whisker_high), cy - box_h / 4.0, x_of(s->whisker_high),
             cy + box_h / 4.0, kAxisColor);
    doc.rect(x_of(s->q1), cy - box_h / 2.0, x_of(s->q3) - x_of(s->q1), box_h,
             kBoxFill, kAxisColor);
    doc.line(x_of(s->median), cy - box_h / 2.0, x_of(s->median), cy + box_h / 2.0,
             kAxisColor, 1.5);
    for (double outlier : s->outliers) {
      doc.circle(x_of(outlier), cy, 2.5, kAxisColor);
    }
  }
  return doc.str();
}

// ---- machine-readable chart mirrors ------------------------------------------

std::string group_chart_data_json(std::span<const GroupBar> bars) {
  ojson doc = ojson::array();
  for (const GroupBar& bar : bars) {
    ojson node;
    node["label"] = bar.label;
    node["count"] = bar.count;
    node["fraction_num"] = bar.fraction.num;
    node["fraction_den"] = bar.fraction.den;
    node["percent"] = format_percent(bar.fraction);
    node["bar_label"] = count_label(bar);
    doc.push_back(std::move(node));
  }
  return doc.dump(2) + "\n";
}

std::string construct_chart_data_json(std::span<const ConstructStats> stats,
                                      Audience audience) {
  ojson doc;
  doc["audience"] = std::string(audience_key(audience));
  doc["scale"] = ojson::array({kScaleMin, kScaleMax});
  doc["neutral_score"] = kNeutralScore;
  ojson bars = ojson::array();
  for (const ConstructStats& s : stats) bars.push_back(construct_node(s));
  doc["bars"] = std::move(bars);
  return doc.dump(2) + "\n";
}

std::string boxplot_chart_data_json(std::span<const BoxplotStats> items,
                                    const PpsInstrument& instrument) {
  ojson doc;
  doc["audience"] = std::string(audience_key(instrument.audience));
  doc["scale"] = ojson::array({kScaleMin, kScaleMax});
  ojson rows = ojson::array();
  for (const InstrumentItem& item : instrument.items) {
    const BoxplotStats* s = stats_for_item(items, item.id);
    if (s == nullptr) {
      throw Error(DiagCode::MissingItemStats,
                  "boxplot_chart_data_json: no stats for item '" + item.id + "'");
    }
    ojson node;
    node["item_id"] = s->item_id;
    node["statement"] = item.statement;
    node["n"] = s->n;
    node["min"] = s->min;
    node["q1"] = s->q1;
    node["median"] = s->median;
    node["q3"] = s->q3;
    node["max"] = s->max;
    node["whisker_low"] = s->whisker_low;
    node["whisker_high"] = s->whisker_high;
    node["outliers"] = s->outliers;
    rows.push_back(std::move(node));
  }
  doc["items"] = std::move(rows);
  return doc.dump(2) + "\n";
}

// ---- bundle -------------------------------------------------------------------

ReportBundle build_report_bundle(std::span<const Persona> personas,
                                 std::span<const AudienceStats> audiences,
                                 const RunConfig& config,
                                 std::span<const CardFormat> formats) {
  if (personas.empty()) {
    throw Error(DiagCode::EmptyPersonaSet, "build_report_bundle: no personas");
  }
  ReportBundle bundle;
  const auto extension = [](CardFormat format) {
    switch (format) {
      case CardFormat::Markdown:
        return ".md";
      case CardFormat::Html:
        return ".html";
      case CardFormat::Json:
        return ".json";
    }
    return ".md";
  };

  for (CardFormat format : formats) {
    for (const Persona& persona : personas) {
      bundle.files.emplace_back(
          std::filesystem::path("personas") / (persona_slug(persona.name) + extension(format)),
          render_card(persona, format));
    }
    bundle.files.emplace_back(
        std::filesystem::path("personas") / (std::string("personas") + extension(format)),
        render_cards(personas, format));
  }

  const std::vector<GroupBar> bars = group_bars(personas);
  bundle.files.emplace_back(std::filesystem::path("figures") / "fig2_groups.svg",
                            render_group_chart(bars));
  bundle.files.emplace_back(std::filesystem::path("data") / "fig2_groups.json",
                            group_chart_data_json(bars));

  for (const AudienceStats& audience : audiences) {
    std::vector<ConstructStats> with_overall = audience.constructs;
    with_overall.push_back(audience.overall);
    const bool user = audience.audience == Audience::User;
    const PpsInstrument& instrument =
        user ? config.user_instrument : config.designer_instrument;
    bundle.files.emplace_back(
        std::filesystem::path("figures") /
            (user ? "fig3_user_constructs.svg" : "fig4_designer_constructs.svg"),
        render_construct_chart(with_overall, audience.audience));
    bundle.files.emplace_back(
        std::filesystem::path("data") /
            (user ? "fig3_user_constructs.json" : "fig4_designer_constructs.json"),
        construct_chart_data_json(with_overall, audience.audience));
    bundle.files.emplace_back(
        std::filesystem::path("figures") /
            (user ? "fig5_user_items.svg" : "fig6_designer_items.svg"),
        render_boxplot_chart(audience.items, instrument));
    bundle.files.emplace_back(
        std::filesystem::path("data") /
            (user ? "fig5_user_items.json" : "fig6_designer_items.json"),
        boxplot_chart_data_json(audience.items, instrument));
  }
  return bundle;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw std::runtime_error("short write to '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_bundle(const ReportBundle& bundle, const std::filesystem::path& out_dir) {
  for (const auto& [relative, content] : bundle.files) {
    write_file_atomic(out_dir / relative, content);
  }
}

}  // namespace empath

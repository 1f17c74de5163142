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

#include "empath/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct CliFlags {
  std::string survey;
  std::string pps_users;
  std::string pps_designers;
  std::string config;
  std::string personas;
  std::string stats;
  std::string out_dir;
  std::string formats;
  std::string scoring_mode;
  bool allow_missing = false;
  bool allow_empty_audience = false;
  bool per_persona = false;
  bool dry_run = false;
};

void add_common_options(CLI::App& cmd, CliFlags& flags) {
  cmd.add_option("--survey", flags.survey, "Survey responses CSV");
  cmd.add_option("--pps-users", flags.pps_users, "User perception CSV (long format)");
  cmd.add_option("--pps-designers", flags.pps_designers,
                 "Designer perception CSV (long format)");
  cmd.add_option("--config", flags.config, "Run configuration JSON");
  cmd.add_option("--personas", flags.personas,
                 "Personas artifact path (default <out>/artifacts/personas.json)");
  cmd.add_option("--stats", flags.stats,
                 "Stats artifact path (default <out>/artifacts/stats.json)");
  cmd.add_option("--out", flags.out_dir, "Output directory (default from config)");
  cmd.add_option("--format", flags.formats,
                 "Comma-separated card formats: markdown,html,json");
  cmd.add_option("--scoring-mode", flags.scoring_mode,
                 "Quadrant scoring: literal (default) or reverse_coded");
  cmd.add_flag("--allow-missing", flags.allow_missing,
               "Accept PPS participants with incomplete item sets");
  cmd.add_flag("--allow-empty-audience", flags.allow_empty_audience,
               "Evaluate whatever audiences have participants");
  cmd.add_flag("--per-persona", flags.per_persona,
               "Add the per-persona overall breakdown (extension)");
  cmd.add_flag("--dry-run", flags.dry_run, "Print the plan without writing");
}

std::optional<empath::PipelineOptions> to_options(const CliFlags& flags,
                                                  std::ostream& err) {
  empath::PipelineOptions options;
  const auto set = [](std::optional<std::string>& slot, const std::string& value) {
    if (!value.empty()) slot = value;
  };
  set(options.survey_path, flags.survey);
  set(options.pps_users_path, flags.pps_users);
  set(options.pps_designers_path, flags.pps_designers);
  set(options.config_path, flags.config);
  set(options.personas_path, flags.personas);
  set(options.stats_path, flags.stats);
  set(options.out_dir, flags.out_dir);

  if (!flags.scoring_mode.empty()) {
    const auto mode = empath::parse_scoring_mode(flags.scoring_mode);
    if (!mode.has_value()) {
      err << "unknown scoring mode '" << flags.scoring_mode
          << "' (expected literal or reverse_coded)\n";
      return std::nullopt;
    }
    options.scoring_mode = mode;
  }
  if (!flags.formats.empty()) {
    std::vector<empath::CardFormat> formats;
    std::size_t start = 0;
    while (start <= flags.formats.size()) {
      const std::size_t comma = flags.formats.find(',', start);
      const std::string token = flags.formats.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!token.empty()) {
        const auto format = empath::parse_card_format(token);
        if (!format.has_value()) {
          err << "unknown card format '" << token
              << "' (expected markdown, html or json)\n";
          return std::nullopt;
        }
        if (std::find(formats.begin(), formats.end(), *format) == formats.end()) {
          formats.push_back(*format);
        }
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (formats.empty()) {
      err << "--format needs at least one of markdown, html, json\n";
      return std::nullopt;
    }
    options.formats = std::move(formats);
  }
  options.allow_missing = flags.allow_missing;
  options.allow_empty_audience = flags.allow_empty_audience;
  options.per_persona = flags.per_persona;
  options.dry_run = flags.dry_run;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "empath: empathy-map persona pipeline\n"
      "Scores explainability-perception surveys into empathy maps, groups them\n"
      "into personas and evaluates the personas from perception-scale data."};
  app.require_subcommand(1);

  CliFlags flags;
  using Command = int (*)(const empath::PipelineOptions&, std::ostream&, std::ostream&);
  struct Sub {
    const char* name;
    const char* description;
    Command command;
  };
  const Sub subs[] = {
      {"validate", "Parse and validate the input datasets", empath::cmd_validate},
      {"personas", "Score the survey and synthesize personas", empath::cmd_personas},
      {"evaluate", "Compute perception statistics from PPS responses",
       empath::cmd_evaluate},
      {"report", "Render persona cards, figures and data exports", empath::cmd_report},
      {"run", "Full pipeline: validate, personas, evaluate, report", empath::cmd_run},
  };

  Command selected = nullptr;
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.description);
    add_common_options(*cmd, flags);
    cmd->callback([&selected, command = sub.command] { selected = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return empath::kExitUsageError;
  }

  const std::optional<empath::PipelineOptions> options = to_options(flags, std::cerr);
  if (!options.has_value()) return empath::kExitUsageError;
  return selected(*options, std::cout, std::cerr);
}

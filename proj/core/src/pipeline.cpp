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

#include "empath/empathy.hpp"
#include "empath/ingest.hpp"
#include "empath/json_io.hpp"
#include "empath/persona.hpp"
#include "empath/pps.hpp"
#include "empath/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace empath {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics,
                       std::string_view source, std::ostream& stream) {
  for (const Diagnostic& diagnostic : diagnostics) {
    stream << source << ": " << diagnostic.to_string() << "\n";
  }
}

// Loads the run config and applies CLI overrides. Returns an exit code;
// kExitOk means `config` is usable.
int load_config(const PipelineOptions& options, RunConfig& config, std::ostream& out,
                std::ostream& err) {
  if (options.config_path.has_value()) {
    const std::optional<std::string> text = read_file(*options.config_path);
    if (!text.has_value()) {
      err << "config file not found: " << *options.config_path << "\n";
      return kExitUsageError;
    }
    ConfigLoadResult loaded = load_run_config(*text);
    print_diagnostics(loaded.diagnostics, *options.config_path,
                      loaded.ok() ? out : err);
    if (!loaded.ok()) return kExitDataError;
    config = std::move(loaded.config);
  } else {
    config = default_run_config();
  }
  if (options.scoring_mode.has_value()) config.scoring = *options.scoring_mode;
  if (options.formats.has_value()) config.report_formats = *options.formats;
  if (options.out_dir.has_value()) config.output_dir = *options.out_dir;
  if (options.allow_missing) config.allow_missing_items = true;
  if (options.per_persona) config.per_persona_breakdown = true;
  return kExitOk;
}

fs::path artifacts_dir(const RunConfig& config) {
  return fs::path(config.output_dir) / "artifacts";
}

fs::path personas_artifact(const PipelineOptions& options, const RunConfig& config) {
  if (options.personas_path.has_value()) return fs::path(*options.personas_path);
  return artifacts_dir(config) / "personas.json";
}

fs::path stats_artifact(const PipelineOptions& options, const RunConfig& config) {
  if (options.stats_path.has_value()) return fs::path(*options.stats_path);
  return artifacts_dir(config) / "stats.json";
}

std::vector<std::string> persona_names(std::span<const Persona> personas) {
  std::vector<std::string> names;
  names.reserve(personas.size());
  for (const Persona& persona : personas) names.push_back(persona.name);
  return names;
}

struct SurveyStage {
  std::vector<SurveyResponse> responses;
  std::vector<EmpathyMap> maps;
  std::vector<PersonaGroup> groups;
  std::vector<Persona> personas;
};

// Parse + score + aggregate + synthesize; prints diagnostics and returns an
// exit code.
int run_survey_stage(const std::string& survey_path, const RunConfig& config,
                     SurveyStage& stage, std::ostream& out, std::ostream& err) {
  const std::optional<std::string> text = read_file(survey_path);
  if (!text.has_value()) {
    err << "survey file not found: " << survey_path << "\n";
    return kExitUsageError;
  }
  SurveyParseResult parsed = parse_survey_dataset(*text, config.schema);
  print_diagnostics(parsed.diagnostics, survey_path, parsed.ok() ? out : err);
  if (!parsed.ok()) return kExitDataError;
  if (parsed.responses.empty()) {
    err << survey_path << ": no respondents\n";
    return kExitDataError;
  }
  stage.responses = std::move(parsed.responses);
  stage.maps.reserve(stage.responses.size());
  for (const SurveyResponse& response : stage.responses) {
    stage.maps.push_back(build_map(response, config.scoring));
  }
  stage.groups = aggregate(stage.maps);
  stage.personas = synthesize(stage.groups, stage.responses, config);
  return kExitOk;
}

struct EvaluateInputs {
  std::optional<std::vector<PpsResponse>> users;
  std::optional<std::vector<PpsResponse>> designers;
};

int parse_pps_file(const std::string& path, const PpsInstrument& instrument,
                   const std::optional<std::vector<std::string>>& names,
                   const RunConfig& config, bool allow_empty,
                   std::optional<std::vector<PpsResponse>>& slot, std::ostream& out,
                   std::ostream& err) {
  const std::optional<std::string> text = read_file(path);
  if (!text.has_value()) {
    err << "PPS file not found: " << path << "\n";
    return kExitUsageError;
  }
  PpsParseResult parsed =
      parse_pps_dataset(*text, instrument, names, config.allow_missing_items);
  print_diagnostics(parsed.diagnostics, path, parsed.ok() ? out : err);
  if (!parsed.ok()) return kExitDataError;
  if (parsed.responses.empty()) {
    if (!allow_empty) {
      err << path << ": no participants (pass --allow-empty-audience to skip)\n";
      return kExitDataError;
    }
    out << path << ": warning: no participants; audience skipped\n";
    return kExitOk;
  }
  slot = std::move(parsed.responses);
  return kExitOk;
}

}  // namespace

int cmd_validate(const PipelineOptions& options, std::ostream& out, std::ostream& err) {
  if (!options.survey_path.has_value() && !options.pps_users_path.has_value() &&
      !options.pps_designers_path.has_value()) {
    err << "validate: nothing to validate (pass --survey and/or --pps-users/"
           "--pps-designers)\n";
    return kExitUsageError;
  }

  RunConfig config;
  if (const int code = load_config(options, config, out, err); code != kExitOk) {
    return code;
  }

  std::size_t errors = 0;
  std::size_t warnings = 0;
  const auto tally = [&](const std::vector<Diagnostic>& diagnostics) {
    errors += count_errors(diagnostics);
    warnings += count_warnings(diagnostics);
  };

  std::optional<std::vector<std::string>> names;
  if (options.survey_path.has_value()) {
    const std::optional<std::string> text = read_file(*options.survey_path);
    if (!text.has_value()) {
      err << "survey file not found: " << *options.survey_path << "\n";
      return kExitUsageError;
    }
    SurveyParseResult parsed = parse_survey_dataset(*text, config.schema);
    print_diagnostics(parsed.diagnostics, *options.survey_path, out);
    tally(parsed.diagnostics);
    if (parsed.ok() && !parsed.responses.empty()) {
      std::vector<EmpathyMap> maps;
      maps.reserve(parsed.responses.size());
      for (const SurveyResponse& response : parsed.responses) {
        maps.push_back(build_map(response, config.scoring));
      }
      names = persona_names(synthesize(aggregate(maps), parsed.responses, config));
    }
  }
  if (!names.has_value() && (options.pps_users_path.has_value())) {
    out << "note: no valid survey given; persona selections are not checked\n";
  }

  const auto validate_pps = [&](const std::string& path,
                                const PpsInstrument& instrument) -> int {
    const std::optional<std::string> text = read_file(path);
    if (!text.has_value()) {
      err << "PPS file not found: " << path << "\n";
      return kExitUsageError;
    }
    PpsParseResult parsed = parse_pps_dataset(
        *text, instrument,
        instrument.audience == Audience::User ? names : std::nullopt,
        config.allow_missing_items);
    print_diagnostics(parsed.diagnostics, path, out);
    tally(parsed.diagnostics);
    return kExitOk;
  };
  if (options.pps_users_path.has_value()) {
    if (const int code = validate_pps(*options.pps_users_path, config.user_instrument);
        code != kExitOk) {
      return code;
    }
  }
  if (options.pps_designers_path.has_value()) {
    if (const int code =
            validate_pps(*options.pps_designers_path, config.designer_instrument);
        code != kExitOk) {
      return code;
    }
  }

  out << errors << " errors, " << warnings << " warnings\n";
  return errors == 0 ? kExitOk : kExitDataError;
}

int cmd_personas(const PipelineOptions& options, std::ostream& out, std::ostream& err) {
  if (!options.survey_path.has_value()) {
    err << "personas: --survey is required\n";
    return kExitUsageError;
  }
  RunConfig config;
  if (const int code = load_config(options, config, out, err); code != kExitOk) {
    return code;
  }

  const fs::path maps_path = artifacts_dir(config) / "empathy_maps.json";
  const fs::path personas_path = personas_artifact(options, config);
  if (options.dry_run) {
    out << "plan: read " << *options.survey_path << "\n";
    out << "plan: write " << maps_path.string() << "\n";
    out << "plan: write " << personas_path.string() << "\n";
    out << "dry run: nothing written\n";
    return kExitOk;
  }

  SurveyStage stage;
  if (const int code = run_survey_stage(*options.survey_path, config, stage, out, err);
      code != kExitOk) {
    return code;
  }

  try {
    write_file_atomic(maps_path, empathy_maps_to_json(stage.maps, config.scoring));
    write_file_atomic(personas_path, personas_to_json(stage.personas));
  } catch (const std::exception& e) {
    err << "personas: " << e.what() << "\n";
    return kExitDataError;
  }

  out << "wrote " << maps_path.string() << "\n";
  out << "wrote " << personas_path.string() << "\n";
  out << stage.personas.size() << " personas from " << stage.responses.size()
      << " respondents\n";

  std::size_t name_width = 4;
  for (const Persona& persona : stage.personas) {
    name_width = std::max(name_width, persona.name.size());
  }
  out << std::left << std::setw(static_cast<int>(name_width + 2)) << "name"
      << std::setw(11) << "signature" << std::right << std::setw(6) << "size"
      << std::setw(8) << "share" << "\n";
  for (const Persona& persona : stage.personas) {
    out << std::left << std::setw(static_cast<int>(name_width + 2)) << persona.name
        << std::setw(11) << persona.signature.to_string() << std::right << std::setw(6)
        << persona.size << std::setw(8) << format_percent(persona.fraction) << "\n";
  }
  return kExitOk;
}

int cmd_evaluate(const PipelineOptions& options, std::ostream& out, std::ostream& err) {
  if (!options.pps_users_path.has_value() && !options.pps_designers_path.has_value()) {
    err << "evaluate: pass --pps-users and/or --pps-designers\n";
    return kExitUsageError;
  }
  RunConfig config;
  if (const int code = load_config(options, config, out, err); code != kExitOk) {
    return code;
  }
  if (!options.allow_empty_audience &&
      (!options.pps_users_path.has_value() || !options.pps_designers_path.has_value())) {
    err << "evaluate: both audiences are required unless --allow-empty-audience is "
           "set\n";
    return kExitUsageError;
  }

  const fs::path personas_path = personas_artifact(options, config);
  const fs::path stats_path = stats_artifact(options, config);
  if (options.dry_run) {
    out << "plan: read " << personas_path.string() << "\n";
    if (options.pps_users_path.has_value()) {
      out << "plan: read " << *options.pps_users_path << "\n";
    }
    if (options.pps_designers_path.has_value()) {
      out << "plan: read " << *options.pps_designers_path << "\n";
    }
    out << "plan: write " << stats_path.string() << "\n";
    out << "dry run: nothing written\n";
    return kExitOk;
  }

  const std::optional<std::string> personas_text = read_file(personas_path);
  if (!personas_text.has_value()) {
    err << "missing artifact: " << personas_path.string()
        << " (run the personas stage first)\n";
    return kExitDataError;
  }
  PersonaLoadResult loaded = personas_from_json(*personas_text);
  print_diagnostics(loaded.diagnostics, personas_path.string(),
                    loaded.ok() ? out : err);
  if (!loaded.ok()) return kExitDataError;
  if (loaded.personas.empty()) {
    err << personas_path.string() << ": no personas\n";
    return kExitDataError;
  }
  const std::vector<std::string> names = persona_names(loaded.personas);

  EvaluateInputs inputs;
  if (options.pps_users_path.has_value()) {
    if (const int code = parse_pps_file(*options.pps_users_path,
                                        config.user_instrument, names, config,
                                        options.allow_empty_audience, inputs.users,
                                        out, err);
        code != kExitOk) {
      return code;
    }
  }
  if (options.pps_designers_path.has_value()) {
    if (const int code = parse_pps_file(*options.pps_designers_path,
                                        config.designer_instrument, std::nullopt,
                                        config, options.allow_empty_audience,
                                        inputs.designers, out, err);
        code != kExitOk) {
      return code;
    }
  }
  if (!inputs.users.has_value() && !inputs.designers.has_value()) {
    err << "evaluate: no participants in any audience\n";
    return kExitDataError;
  }

  std::vector<AudienceStats> audiences;
  if (inputs.users.has_value()) {
    audiences.push_back(audience_stats(*inputs.users, config.user_instrument, names,
                                       config.per_persona_breakdown));
  }
  if (inputs.designers.has_value()) {
    audiences.push_back(audience_stats(*inputs.designers, config.designer_instrument,
                                       names, false));
  }

  try {
    write_file_atomic(stats_path, stats_to_json(audiences));
  } catch (const std::exception& e) {
    err << "evaluate: " << e.what() << "\n";
    return kExitDataError;
  }

  for (const AudienceStats& audience : audiences) {
    out << audience_key(audience.audience) << ": " << audience.n
        << " participants, overall mean "
        << std::fixed << std::setprecision(2) << audience.overall.mean
        << std::defaultfloat << std::setprecision(6) << "\n";
  }
  out << "wrote " << stats_path.string() << "\n";
  return kExitOk;
}

int cmd_report(const PipelineOptions& options, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const int code = load_config(options, config, out, err); code != kExitOk) {
    return code;
  }

  const fs::path personas_path = personas_artifact(options, config);
  const fs::path stats_path = stats_artifact(options, config);
  const fs::path out_root(config.output_dir);
  if (options.dry_run) {
    out << "plan: read " << personas_path.string() << "\n";
    out << "plan: read " << stats_path.string() << "\n";
    out << "plan: write report tree under " << out_root.string() << "\n";
    out << "dry run: nothing written\n";
    return kExitOk;
  }

  const std::optional<std::string> personas_text = read_file(personas_path);
  if (!personas_text.has_value()) {
    err << "missing artifact: " << personas_path.string()
        << " (run the personas stage first)\n";
    return kExitDataError;
  }
  PersonaLoadResult loaded = personas_from_json(*personas_text);
  print_diagnostics(loaded.diagnostics, personas_path.string(),
                    loaded.ok() ? out : err);
  if (!loaded.ok()) return kExitDataError;

  const std::optional<std::string> stats_text = read_file(stats_path);
  if (!stats_text.has_value()) {
    err << "missing artifact: " << stats_path.string()
        << " (run the evaluate stage first)\n";
    return kExitDataError;
  }

  StatsLoadResult stats_loaded = stats_from_json(*stats_text);
  print_diagnostics(stats_loaded.diagnostics, stats_path.string(),
                    stats_loaded.ok() ? out : err);
  if (!stats_loaded.ok()) return kExitDataError;

  try {
    const ReportBundle bundle = build_report_bundle(
        loaded.personas, stats_loaded.audiences, config, config.report_formats);
    write_bundle(bundle, out_root);
    out << "wrote " << bundle.files.size() << " report files under "
        << out_root.string() << "\n";
  } catch (const Error& e) {
    err << "report: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "report: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

int cmd_run(const PipelineOptions& options, std::ostream& out, std::ostream& err) {
  if (options.dry_run) {
    RunConfig config;
    if (const int code = load_config(options, config, out, err); code != kExitOk) {
      return code;
    }
    out << "plan:\n";
    out << "  1. validate  survey=" << options.survey_path.value_or("<none>")
        << " pps-users=" << options.pps_users_path.value_or("<none>")
        << " pps-designers=" << options.pps_designers_path.value_or("<none>") << "\n";
    out << "  2. personas  -> "
        << (artifacts_dir(config) / "empathy_maps.json").string() << ", "
        << personas_artifact(options, config).string() << "\n";
    out << "  3. evaluate  -> " << stats_artifact(options, config).string() << "\n";
    out << "  4. report    -> " << config.output_dir << "/personas, "
        << config.output_dir << "/figures, " << config.output_dir << "/data\n";
    out << "dry run: nothing written\n";
    return kExitOk;
  }

  struct Stage {
    const char* name;
    int (*command)(const PipelineOptions&, std::ostream&, std::ostream&);
  };
  const Stage stages[] = {
      {"validate", cmd_validate},
      {"personas", cmd_personas},
      {"evaluate", cmd_evaluate},
      {"report", cmd_report},
  };
  for (const Stage& stage : stages) {
    out << "[" << stage.name << "]\n";
    const int code = stage.command(options, out, err);
    if (code != kExitOk) {
      err << "run: stage '" << stage.name << "' failed\n";
      return code;
    }
  }
  return kExitOk;
}

}  // namespace empath

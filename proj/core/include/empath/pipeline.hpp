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

#ifndef EMPATH_PIPELINE_HPP
#define EMPATH_PIPELINE_HPP

#include "empath/config.hpp"
#include "empath/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace empath {

// Exit code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

// Options assembled by the CLI. Staged artifacts default to
// <out>/artifacts/{empathy_maps,personas,stats}.json.
struct PipelineOptions {
  std::optional<std::string> survey_path;
  std::optional<std::string> pps_users_path;
  std::optional<std::string> pps_designers_path;
  std::optional<std::string> config_path;
  std::optional<std::string> personas_path;  // override artifact location
  std::optional<std::string> stats_path;     // override artifact location
  std::optional<std::string> out_dir;        // overrides config output_dir
  std::optional<ScoringMode> scoring_mode;
  std::optional<std::vector<CardFormat>> formats;
  bool allow_missing = false;
  bool allow_empty_audience = false;
  bool per_persona = false;
  bool dry_run = false;
};

// Each command prints its products to `out`, problems to `err`, and returns
// an exit code: 0 success, 1 data/validation error, 2 usage error.
int cmd_validate(const PipelineOptions& options, std::ostream& out, std::ostream& err);
int cmd_personas(const PipelineOptions& options, std::ostream& out, std::ostream& err);
int cmd_evaluate(const PipelineOptions& options, std::ostream& out, std::ostream& err);
int cmd_report(const PipelineOptions& options, std::ostream& out, std::ostream& err);

// validate -> personas -> evaluate -> report; stops at the first failing
// stage and prefixes its diagnostics with the stage name.
int cmd_run(const PipelineOptions& options, std::ostream& out, std::ostream& err);

}  // namespace empath

#endif  // EMPATH_PIPELINE_HPP

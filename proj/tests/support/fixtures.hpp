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

#ifndef EMPATH_TESTS_SUPPORT_FIXTURES_HPP
#define EMPATH_TESTS_SUPPORT_FIXTURES_HPP

#include "empath/empathy.hpp"
#include "empath/types.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace empath::testing {

using AnswerPair = std::pair<int, int>;

// Literal-mode answer pair producing the wanted polarity for the quadrant.
// `variant` rotates through several pairs so fixtures are not constant.
AnswerPair answers_for(Quadrant quadrant, Polarity polarity, std::size_t variant);

// A full eight-answer row (q_does_1, q_does_2, ..., q_says_2) realizing the
// signature under literal scoring.
std::array<int, 8> answer_row_for(MapSignature signature, std::size_t variant);

// 61 respondents over five signatures with multiplicities 21/14/11/10/5
// (descending), members interleaved round-robin. Demographics give each
// group a distinct, deterministic mode.
std::string survey_csv_61();

// One respondent per signature, 16 rows.
std::string survey_csv_16();

// 60 user participants engineered to an overall mean of exactly 3.7 and
// selections 25/15/10/6/4 over `persona_names` (needs 5 names).
std::string pps_users_csv_60(const std::vector<std::string>& persona_names);

// 38 designer participants engineered to an overall mean of exactly 3.5.
std::string pps_designers_csv_38();

// Deterministic 200-user dataset scored by
// 1 + ((7p + 13i + (p mod 11)(i mod 7)) mod 5); matches the frozen oracle.
std::string pps_users_csv_200(const std::vector<std::string>& persona_names);
int synthetic_score(int participant, int item);

// Large synthetic survey for throughput checks.
std::string survey_csv_synthetic(std::size_t respondents);

// --- filesystem helpers -------------------------------------------------------

// Self-deleting unique directory under the system temp dir.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

// Order-independent digest of a directory tree (relative paths + bytes).
std::uint64_t tree_hash(const std::filesystem::path& root);

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the installed CLI binary with `args`, cwd = `workdir`.
CliResult run_cli(const std::string& args, const std::filesystem::path& workdir);

}  // namespace empath::testing

#endif  // EMPATH_TESTS_SUPPORT_FIXTURES_HPP

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

#include "fixtures.hpp"

#include "empath/csv.hpp"
#include "empath/instrument.hpp"
#include "empath/survey.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace empath::testing {

AnswerPair answers_for(Quadrant quadrant, Polarity polarity, std::size_t variant) {
  // literal mode: Does averages, the rest subtract; positive iff >= 2.5
  static constexpr AnswerPair kDoesPositive[] = {{4, 4}, {5, 5}, {2, 3}, {5, 1}, {3, 2}};
  static constexpr AnswerPair kDoesNegative[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 1}};
  static constexpr AnswerPair kSubPositive[] = {{4, 1}, {5, 1}, {5, 2}};
  static constexpr AnswerPair kSubNegative[] = {{3, 3}, {1, 5}, {2, 3}, {1, 1}, {4, 2}};
  if (quadrant == Quadrant::Does) {
    return polarity == Polarity::Positive ? kDoesPositive[variant % 5]
                                          : kDoesNegative[variant % 5];
  }
  return polarity == Polarity::Positive ? kSubPositive[variant % 3]
                                        : kSubNegative[variant % 5];
}

std::array<int, 8> answer_row_for(MapSignature signature, std::size_t variant) {
  std::array<int, 8> row{};
  for (std::size_t q = 0; q < 4; ++q) {
    const AnswerPair pair =
        answers_for(kQuadrants[q], signature.polarity(kQuadrants[q]), variant + q);
    row[2 * q] = pair.first;
    row[2 * q + 1] = pair.second;
  }
  return row;
}

namespace {

std::string survey_header_line() {
  return "respondent_id,age_band,gender,schooling,"
         "q_does_1,q_does_2,q_thinks_1,q_thinks_2,q_feels_1,q_feels_2,"
         "q_says_1,q_says_2\n";
}

std::string survey_row(const std::string& id, const std::string& age,
                       const std::string& gender, const std::string& schooling,
                       const std::array<int, 8>& answers) {
  std::string row = id + ',' + age + ',' + gender + ',' + schooling;
  for (int answer : answers) {
    row += ',';
    row += std::to_string(answer);
  }
  row += '\n';
  return row;
}

}  // namespace

std::string survey_csv_61() {
  // five signatures, multiplicities matching the published group sizes
  static constexpr std::uint8_t kSignatures[] = {15, 14, 11, 7, 0};
  static constexpr std::size_t kSizes[] = {21, 14, 11, 10, 5};
  // distinct modal demographics per group (values from the default schema)
  static constexpr const char* kAges[] = {"25-34", "18-24", "35-44", "25-34", "45-54"};
  static constexpr const char* kGenders[] = {"M", "F", "F", "M", "M"};
  static constexpr const char* kSchooling[] = {"BSc", "MSc", "BSc", "secondary", "PhD"};
  // minority values sprinkled in so modes are real modes, not constants
  static constexpr const char* kAltAges[] = {"55-64", "25-34", "18-24", "35-44", "65+"};
  static constexpr const char* kAltGenders[] = {"F", "M", "M", "F", "F"};
  static constexpr const char* kAltSchooling[] = {"MSc", "BSc", "PhD", "BSc", "MSc"};

  std::string csv = survey_header_line();
  std::size_t emitted[5] = {0, 0, 0, 0, 0};
  std::size_t respondent = 0;
  // interleave group members round-robin so aggregation cannot rely on runs
  bool remaining = true;
  while (remaining) {
    remaining = false;
    for (std::size_t g = 0; g < 5; ++g) {
      if (emitted[g] >= kSizes[g]) continue;
      const std::size_t member = emitted[g]++;
      remaining = true;
      ++respondent;
      char id[8];
      std::snprintf(id, sizeof(id), "r%03zu", respondent);
      const bool minority = member % 3 == 2;  // strictly less than half
      csv += survey_row(id, minority ? kAltAges[g] : kAges[g],
                        minority ? kAltGenders[g] : kGenders[g],
                        minority ? kAltSchooling[g] : kSchooling[g],
                        answer_row_for(MapSignature(kSignatures[g]), member));
    }
  }
  return csv;
}

std::string survey_csv_16() {
  std::string csv = survey_header_line();
  for (int bits = 0; bits < 16; ++bits) {
    char id[8];
    std::snprintf(id, sizeof(id), "s%02d", bits);
    csv += survey_row(id, "25-34", "F", "BSc",
                      answer_row_for(MapSignature(static_cast<std::uint8_t>(bits)),
                                     static_cast<std::size_t>(bits)));
  }
  return csv;
}

namespace {

std::string pps_header_line() {
  return "participant_id,audience,selected_persona,item_id,score\n";
}

std::string pps_rows(const std::string& participant, std::string_view audience,
                     const std::string& selected, const PpsInstrument& instrument,
                     const std::vector<int>& scores) {
  std::string rows;
  for (std::size_t i = 0; i < instrument.items.size(); ++i) {
    rows += participant;
    rows += ',';
    rows += audience;
    rows += ',';
    rows += csv::escape(selected);
    rows += ',';
    rows += instrument.items[i].id;
    rows += ',';
    rows += std::to_string(scores[i]);
    rows += '\n';
  }
  return rows;
}

}  // namespace

std::string pps_users_csv_60(const std::vector<std::string>& persona_names) {
  if (persona_names.size() < 5) {
    throw std::invalid_argument("pps_users_csv_60 needs five persona names");
  }
  const PpsInstrument instrument = default_user_instrument();
  // 42 participants sum to 41, 18 sum to 40: overall mean 2442/660 = 3.7
  const std::vector<int> kHigh = {3, 4, 3, 4, 3, 3, 3, 4, 5, 4, 5};  // sum 41
  const std::vector<int> kLow = {3, 3, 3, 4, 3, 3, 3, 4, 5, 4, 5};   // sum 40
  // selections 25/15/10/6/4 across the five personas
  static constexpr std::size_t kSelectionCut[] = {25, 40, 50, 56, 60};

  std::string csv = pps_header_line();
  for (std::size_t p = 0; p < 60; ++p) {
    char id[8];
    std::snprintf(id, sizeof(id), "u%02zu", p);
    std::size_t persona = 0;
    while (p >= kSelectionCut[persona]) ++persona;
    csv += pps_rows(id, "user", persona_names[persona], instrument,
                    p < 42 ? kHigh : kLow);
  }
  return csv;
}

std::string pps_designers_csv_38() {
  const PpsInstrument instrument = default_designer_instrument();
  // every participant sums to 42: overall mean exactly 3.5; clarity rated
  // highest, completeness lowest
  const std::vector<int> kScores = {3, 4, 3, 4, 3, 3, 3, 3, 4, 4, 4, 4};  // sum 42
  std::string csv = pps_header_line();
  for (std::size_t p = 0; p < 38; ++p) {
    char id[8];
    std::snprintf(id, sizeof(id), "d%02zu", p);
    csv += pps_rows(id, "designer", "", instrument, kScores);
  }
  return csv;
}

int synthetic_score(int participant, int item) {
  return 1 + ((7 * participant + 13 * item + (participant % 11) * (item % 7)) % 5);
}

std::string pps_users_csv_200(const std::vector<std::string>& persona_names) {
  if (persona_names.empty()) {
    throw std::invalid_argument("pps_users_csv_200 needs persona names");
  }
  const PpsInstrument instrument = default_user_instrument();
  std::string csv = pps_header_line();
  for (int p = 0; p < 200; ++p) {
    char id[8];
    std::snprintf(id, sizeof(id), "u%03d", p);
    std::vector<int> scores(instrument.items.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
      scores[i] = synthetic_score(p, static_cast<int>(i));
    }
    csv += pps_rows(id, "user",
                    persona_names[static_cast<std::size_t>(p) % persona_names.size()],
                    instrument, scores);
  }
  return csv;
}

std::string survey_csv_synthetic(std::size_t respondents) {
  const DemographicSchema schema = default_demographic_schema();
  std::string csv = survey_header_line();
  csv.reserve(respondents * 48);
  for (std::size_t r = 0; r < respondents; ++r) {
    char id[32];
    std::snprintf(id, sizeof(id), "r%07zu", r);
    const MapSignature sig(static_cast<std::uint8_t>((r * 7 + r / 16) % 16));
    csv += survey_row(id, schema.attributes[0].values[r % 6],
                      schema.attributes[1].values[r % 4],
                      schema.attributes[2].values[r % 5],
                      answer_row_for(sig, r % 15));
  }
  return csv;
}

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  const auto base = std::filesystem::temp_directory_path();
  path_ = base / ("empath-test-" + std::to_string(::getpid()) + "-" +
                  std::to_string(counter.fetch_add(1)));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write_file failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_file failed: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t tree_hash(const std::filesystem::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    files.emplace(std::filesystem::relative(entry.path(), root).generic_string(),
                  read_file(entry.path()));
  }
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a
  const auto mix = [&hash](std::string_view bytes) {
    for (char c : bytes) {
      hash ^= static_cast<unsigned char>(c);
      hash *= 1099511628211ULL;
    }
    hash ^= 0xff;
    hash *= 1099511628211ULL;
  };
  for (const auto& [path, content] : files) {
    mix(path);
    mix(content);
  }
  return hash;
}

CliResult run_cli(const std::string& args, const std::filesystem::path& workdir) {
  const std::filesystem::path out_path = workdir / ".cli_stdout";
  const std::filesystem::path err_path = workdir / ".cli_stderr";
  const std::string command = "cd '" + workdir.string() + "' && '" +
                              std::string(EMPATH_CLI_PATH) + "' " + args + " > '" +
                              out_path.string() + "' 2> '" + err_path.string() + "'";
  const int status = std::system(command.c_str());
  CliResult result;
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

}  // namespace empath::testing

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

#include "empath/pps.hpp"

#include "empath/diagnostics.hpp"

#include <algorithm>
#include <numeric>

namespace empath {

namespace {

// Stable reduction order: participants sorted by id, so results do not depend
// on file order.
std::vector<const PpsResponse*> sorted_by_participant(
    std::span<const PpsResponse> responses) {
  std::vector<const PpsResponse*> sorted;
  sorted.reserve(responses.size());
  for (const auto& r : responses) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const PpsResponse* a, const PpsResponse* b) {
              return a->participant_id < b->participant_id;
            });
  return sorted;
}

ConstructStats stats_from_values(std::string construct,
                                 std::span<const double> values) {
  const stats::Summary s = stats::summarize(values);
  ConstructStats out;
  out.construct = std::move(construct);
  out.n = s.n;
  out.mean = s.mean;
  out.sd = s.sd;
  out.ci_lo = s.ci_lo;
  out.ci_hi = s.ci_hi;
  out.degenerate = s.degenerate;
  return out;
}

}  // namespace

std::size_t SelectionDistribution::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                         [](std::size_t acc, const auto& entry) {
                           return acc + entry.second;
                         });
}

double participant_construct_mean(const PpsResponse& response,
                                  std::string_view construct,
                                  const PpsInstrument& instrument) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const InstrumentItem* item : instrument.items_in(construct)) {
    if (const LikertScore* score = response.score_for(item->id)) {
      sum += static_cast<double>(score->value());
      ++count;
    }
  }
  if (count == 0) {
    throw Error(DiagCode::NoItemsAnswered,
                "participant " + response.participant_id +
                    " answered no items of construct '" + std::string(construct) + "'");
  }
  return sum / static_cast<double>(count);
}

ConstructStats construct_stats(std::span<const PpsResponse> responses,
                               std::string_view construct,
                               const PpsInstrument& instrument) {
  if (responses.empty()) {
    throw Error(DiagCode::EmptyInput, "construct_stats: no responses");
  }
  std::vector<double> values;
  values.reserve(responses.size());
  for (const PpsResponse* response : sorted_by_participant(responses)) {
    bool answered_any = false;
    for (const InstrumentItem* item : instrument.items_in(construct)) {
      if (response->score_for(item->id) != nullptr) {
        answered_any = true;
        break;
      }
    }
    if (answered_any) {
      values.push_back(participant_construct_mean(*response, construct, instrument));
    }
  }
  if (values.empty()) {
    throw Error(DiagCode::EmptyInput,
                "construct_stats: no participant answered construct '" +
                    std::string(construct) + "'");
  }
  return stats_from_values(std::string(construct), values);
}

ConstructStats overall_stats(std::span<const PpsResponse> responses,
                             const PpsInstrument& instrument) {
  if (responses.empty()) {
    throw Error(DiagCode::EmptyInput, "overall_stats: no responses");
  }
  std::vector<double> values;
  values.reserve(responses.size());
  for (const PpsResponse* response : sorted_by_participant(responses)) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const InstrumentItem& item : instrument.items) {
      if (const LikertScore* score = response->score_for(item.id)) {
        sum += static_cast<double>(score->value());
        ++count;
      }
    }
    if (count == 0) continue;
    values.push_back(sum / static_cast<double>(count));
  }
  if (values.empty()) {
    throw Error(DiagCode::EmptyInput, "overall_stats: no answered items");
  }
  return stats_from_values("overall", values);
}

BoxplotStats item_boxplot(std::span<const PpsResponse> responses,
                          std::string_view item_id) {
  std::vector<double> values;
  for (const PpsResponse* response : sorted_by_participant(responses)) {
    if (const LikertScore* score = response->score_for(item_id)) {
      values.push_back(static_cast<double>(score->value()));
    }
  }
  if (values.empty()) {
    throw Error(DiagCode::EmptyInput,
                "item_boxplot: no scores for item '" + std::string(item_id) + "'");
  }
  const stats::Boxplot b = stats::boxplot(values);
  BoxplotStats out;
  out.item_id = std::string(item_id);
  out.n = b.n;
  out.min = b.min;
  out.q1 = b.q1;
  out.median = b.median;
  out.q3 = b.q3;
  out.max = b.max;
  out.whisker_low = b.whisker_low;
  out.whisker_high = b.whisker_high;
  out.outliers = b.outliers;
  return out;
}

SelectionDistribution selection_counts(std::span<const PpsResponse> responses,
                                       std::span<const std::string> persona_names) {
  SelectionDistribution distribution;
  distribution.counts.reserve(persona_names.size());
  for (const std::string& name : persona_names) {
    distribution.counts.emplace_back(name, 0);
  }
  for (const PpsResponse& response : responses) {
    if (!response.selected_persona.has_value()) continue;
    for (auto& [name, count] : distribution.counts) {
      if (name == *response.selected_persona) {
        ++count;
        break;
      }
    }
  }
  return distribution;
}

AudienceStats audience_stats(std::span<const PpsResponse> responses,
                             const PpsInstrument& instrument,
                             std::span<const std::string> persona_names,
                             bool per_persona_breakdown) {
  if (responses.empty()) {
    throw Error(DiagCode::EmptyInput, "audience_stats: no responses");
  }
  AudienceStats out;
  out.audience = instrument.audience;
  out.n = responses.size();
  for (const std::string& construct : instrument.construct_order()) {
    out.constructs.push_back(construct_stats(responses, construct, instrument));
  }
  out.overall = overall_stats(responses, instrument);
  for (const InstrumentItem& item : instrument.items) {
    out.items.push_back(item_boxplot(responses, item.id));
  }
  if (instrument.audience == Audience::User) {
    out.selections = selection_counts(responses, persona_names);
    if (per_persona_breakdown) {
      for (const std::string& name : persona_names) {
        std::vector<PpsResponse> subset;
        for (const PpsResponse& response : responses) {
          if (response.selected_persona == name) subset.push_back(response);
        }
        if (subset.empty()) continue;
        out.per_persona_overall.emplace_back(name, overall_stats(subset, instrument));
      }
    }
  }
  return out;
}

}  // namespace empath

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

#ifndef EMPATH_PPS_HPP
#define EMPATH_PPS_HPP

#include "empath/instrument.hpp"
#include "empath/stats.hpp"
#include "empath/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace empath {

// Agreement statistics for one construct (or "overall") across participants.
// The interval is stored unclamped; charts clamp to the scale for display.
struct ConstructStats {
  std::string construct;  // construct key or "overall"
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  bool degenerate = false;  // n < 2
};

struct BoxplotStats {
  std::string item_id;
  std::size_t n = 0;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  std::vector<double> outliers;
};

struct SelectionDistribution {
  // (persona name, count) in persona order; zero-filled.
  std::vector<std::pair<std::string, std::size_t>> counts;

  std::size_t total() const;
};

// Mean of this participant's answered item scores within the construct.
// Throws Error(NoItemsAnswered) when the participant answered none of them.
double participant_construct_mean(const PpsResponse& response,
                                  std::string_view construct,
                                  const PpsInstrument& instrument);

// Mean of per-participant construct means (never the pooled item mean), with
// sample SD and the 95% Student-t interval. Participants are reduced in
// participant_id order so sums do not depend on input order. Participants with
// no answered item in the construct are skipped. Throws Error(EmptyInput).
ConstructStats construct_stats(std::span<const PpsResponse> responses,
                               std::string_view construct,
                               const PpsInstrument& instrument);

// Same aggregation over per-participant means across ALL instrument items.
ConstructStats overall_stats(std::span<const PpsResponse> responses,
                             const PpsInstrument& instrument);

// Distribution of one item's scores across participants that answered it.
BoxplotStats item_boxplot(std::span<const PpsResponse> responses,
                          std::string_view item_id);

// Counts of user participants per selected persona, zero-filled over
// `persona_names`.
SelectionDistribution selection_counts(std::span<const PpsResponse> responses,
                                       std::span<const std::string> persona_names);

// Everything the reports need for one audience, in instrument order.
struct AudienceStats {
  Audience audience = Audience::User;
  std::size_t n = 0;
  std::vector<ConstructStats> constructs;
  ConstructStats overall;
  std::vector<BoxplotStats> items;
  std::optional<SelectionDistribution> selections;  // users only
  // Extension (off by default): overall stats split by selected persona.
  std::vector<std::pair<std::string, ConstructStats>> per_persona_overall;
};

AudienceStats audience_stats(std::span<const PpsResponse> responses,
                             const PpsInstrument& instrument,
                             std::span<const std::string> persona_names,
                             bool per_persona_breakdown = false);

}  // namespace empath

#endif  // EMPATH_PPS_HPP

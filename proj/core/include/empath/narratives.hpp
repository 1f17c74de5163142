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

#ifndef EMPATH_NARRATIVES_HPP
#define EMPATH_NARRATIVES_HPP

#include "empath/types.hpp"

#include <array>
#include <string>

namespace empath {

// The eight interpretation sentences: one per (quadrant, polarity) cell.
// All cells must be non-empty.
struct NarrativeTable {
  // [quadrant][polarity]; Polarity::Negative == 0, Polarity::Positive == 1.
  std::array<std::array<std::string, 2>, 4> cells;

  const std::string& at(Quadrant q, Polarity p) const {
    return cells[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
  }
  std::string& at(Quadrant q, Polarity p) {
    return cells[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
  }

  bool complete() const;
};

NarrativeTable default_narratives();

}  // namespace empath

#endif  // EMPATH_NARRATIVES_HPP

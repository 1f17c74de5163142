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

#ifndef EMPATH_SVG_HPP
#define EMPATH_SVG_HPP

#include <string>
#include <string_view>

namespace empath::svg {

// Deterministic coordinate formatting: fixed two decimals, trailing zeros
// trimmed, no negative zero.
std::string number(double value);

std::string escape_text(std::string_view text);

enum class Anchor { Start, Middle, End };

// Minimal self-contained SVG writer. Elements are emitted in call order with
// a fixed attribute order; output carries no timestamps or randomness.
class Document {
 public:
  Document(double width, double height);

  void rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view stroke = "");
  void line(double x1, double y1, double x2, double y2, std::string_view stroke,
            double stroke_width = 1.0, bool dashed = false);
  void circle(double cx, double cy, double r, std::string_view fill);
  void text(double x, double y, std::string_view content, Anchor anchor,
            double font_px, std::string_view fill = "#000000");

  std::string str() const;

 private:
  std::string body_;
  double width_ = 0.0;
  double height_ = 0.0;
};

}  // namespace empath::svg

#endif  // EMPATH_SVG_HPP

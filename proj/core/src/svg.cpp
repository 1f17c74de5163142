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

#include "empath/svg.hpp"

#include <cmath>
#include <cstdio>

namespace empath::svg {

std::string number(double value) {
  if (std::fabs(value) < 5e-3) value = 0.0;  // avoid "-0"
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  std::string out(buffer);
  while (!out.empty() && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
        break;
    }
  }
  return out;
}

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::rect(double x, double y, double w, double h, std::string_view fill,
                    std::string_view stroke) {
  body_ += "  <rect x=\"" + number(x) + "\" y=\"" + number(y) + "\" width=\"" +
           number(w) + "\" height=\"" + number(h) + "\" fill=\"" + std::string(fill) +
           "\"";
  if (!stroke.empty()) {
    body_ += " stroke=\"" + std::string(stroke) + "\"";
  }
  body_ += "/>\n";
}

void Document::line(double x1, double y1, double x2, double y2,
                    std::string_view stroke, double stroke_width, bool dashed) {
  body_ += "  <line x1=\"" + number(x1) + "\" y1=\"" + number(y1) + "\" x2=\"" +
           number(x2) + "\" y2=\"" + number(y2) + "\" stroke=\"" + std::string(stroke) +
           "\" stroke-width=\"" + number(stroke_width) + "\"";
  if (dashed) {
    body_ += " stroke-dasharray=\"6 4\"";
  }
  body_ += "/>\n";
}

void Document::circle(double cx, double cy, double r, std::string_view fill) {
  body_ += "  <circle cx=\"" + number(cx) + "\" cy=\"" + number(cy) + "\" r=\"" +
           number(r) + "\" fill=\"" + std::string(fill) + "\"/>\n";
}

void Document::text(double x, double y, std::string_view content, Anchor anchor,
                    double font_px, std::string_view fill) {
  std::string_view anchor_name = "start";
  if (anchor == Anchor::Middle) anchor_name = "middle";
  if (anchor == Anchor::End) anchor_name = "end";
  body_ += "  <text x=\"" + number(x) + "\" y=\"" + number(y) +
           "\" font-family=\"sans-serif\" font-size=\"" + number(font_px) +
           "\" text-anchor=\"" + std::string(anchor_name) + "\" fill=\"" +
           std::string(fill) + "\">" + escape_text(content) + "</text>\n";
}

std::string Document::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + number(width_) +
         "\" height=\"" + number(height_) + "\" viewBox=\"0 0 " + number(width_) +
         " " + number(height_) + "\">\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

}  // namespace empath::svg

// Copyright 2026 The PML Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg_plot.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pml::cli {
namespace {

constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 55;

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Up to ~6 round tick values covering [lo, hi].
std::vector<double> LinearTicks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 5;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span;
       t += step) {
    ticks.push_back(std::fabs(t) < 1e-12 * span ? 0.0 : t);
  }
  return ticks;
}

}  // namespace

std::string RenderLinePlot(const std::vector<PlotSeries>& series,
                           const PlotOptions& options) {
  auto tx = [&](double x) { return options.log_x ? std::log10(x) : x; };
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const PlotSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (options.log_x && x <= 0) continue;
      x_lo = std::min(x_lo, tx(x));
      x_hi = std::max(x_hi, tx(x));
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!std::isfinite(x_lo)) {
    x_lo = 0;
    x_hi = 1;
    y_lo = 0;
    y_hi = 1;
  }
  if (x_hi == x_lo) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  if (y_hi == y_lo) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double w = options.width;
  const double h = options.height;
  const double pw = w - kLeft - kRight;
  const double ph = h - kTop - kBottom;
  auto px = [&](double x) {
    return kLeft + (tx(x) - x_lo) / (x_hi - x_lo) * pw;
  };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * ph; };

  std::string svg = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
      "viewBox=\"0 0 %d %d\" font-family=\"sans-serif\" font-size=\"12\">\n",
      options.width, options.height, options.width, options.height);
  absl::StrAppend(&svg,
                  "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  absl::StrAppendFormat(&svg,
                        "<text x=\"%g\" y=\"22\" font-size=\"15\">%s</text>\n",
                        kLeft, Escape(options.title));
  absl::StrAppendFormat(
      &svg,
      "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      kLeft, kTop, pw, ph);

  const std::vector<double> x_ticks = options.log_x ? [&] {
    std::vector<double> t;
    for (double e = std::ceil(x_lo); e <= x_hi + 1e-9; e += 1) {
      t.push_back(std::pow(10.0, e));
    }
    return t;
  }()
                                                    : LinearTicks(x_lo, x_hi);
  for (double t : x_ticks) {
    const double x = px(t);
    absl::StrAppendFormat(&svg,
                          "<line x1=\"%.2f\" y1=\"%g\" x2=\"%.2f\" y2=\"%g\" "
                          "stroke=\"#ddd\"/>\n",
                          x, kTop, x, kTop + ph);
    absl::StrAppendFormat(
        &svg, "<text x=\"%.2f\" y=\"%g\" text-anchor=\"middle\">%g</text>\n", x,
        kTop + ph + 16, t);
  }
  for (double t : LinearTicks(y_lo, y_hi)) {
    const double y = py(t);
    absl::StrAppendFormat(&svg,
                          "<line x1=\"%g\" y1=\"%.2f\" x2=\"%g\" y2=\"%.2f\" "
                          "stroke=\"#ddd\"/>\n",
                          kLeft, y, kLeft + pw, y);
    absl::StrAppendFormat(
        &svg, "<text x=\"%g\" y=\"%.2f\" text-anchor=\"end\">%g</text>\n",
        kLeft - 6, y + 4, t);
  }
  absl::StrAppendFormat(
      &svg, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">%s</text>\n",
      kLeft + pw / 2, h - 12, Escape(options.x_label));
  absl::StrAppendFormat(&svg,
                        "<text x=\"16\" y=\"%g\" text-anchor=\"middle\" "
                        "transform=\"rotate(-90 16 %g)\">%s</text>\n",
                        kTop + ph / 2, kTop + ph / 2, Escape(options.y_label));

  for (std::size_t i = 0; i < series.size(); ++i) {
    const PlotSeries& s = series[i];
    std::string points;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (options.log_x && x <= 0) continue;
      absl::StrAppendFormat(&points, "%s%.2f,%.2f", points.empty() ? "" : " ",
                            px(x), py(y));
    }
    absl::StrAppendFormat(&svg,
                          "<polyline fill=\"none\" stroke=\"%s\" "
                          "stroke-width=\"1.8\"%s points=\"%s\"/>\n",
                          s.color, s.dashed ? " stroke-dasharray=\"6 4\"" : "",
                          points);
    const double ly = kTop + 14 + 18 * double(i);
    absl::StrAppendFormat(&svg,
                          "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" "
                          "stroke=\"%s\" stroke-width=\"1.8\"%s/>\n",
                          w - kRight + 12, ly, w - kRight + 36, ly, s.color,
                          s.dashed ? " stroke-dasharray=\"6 4\"" : "");
    absl::StrAppendFormat(&svg, "<text x=\"%g\" y=\"%g\">%s</text>\n",
                          w - kRight + 42, ly + 4, Escape(s.name));
  }
  absl::StrAppend(&svg, "</svg>\n");
  return svg;
}

}  // namespace pml::cli

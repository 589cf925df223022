// Copyright 2026 The pdhg-lp Authors
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


#include "svg_plot.h"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <limits>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pdhg::tools {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#e377c2", "#17becf"};

std::string Escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string Timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace

std::string RenderLogPlot(const std::vector<PlotSeries>& series,
                          const PlotOptions& options) {
  constexpr double kLeft = 70, kRight = 20, kTop = 36, kBottom = 48;
  const double w = options.width, h = options.height;
  const double plot_w = w - kLeft - kRight, plot_h = h - kTop - kBottom;

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min, ly_min = x_min, ly_max = -x_min;
  for (const PlotSeries& s : series) {
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!(s.y[i] > 0.0) || !std::isfinite(s.y[i])) continue;
      x_min = std::min(x_min, s.x[i]);
      x_max = std::max(x_max, s.x[i]);
      ly_min = std::min(ly_min, std::log10(s.y[i]));
      ly_max = std::max(ly_max, std::log10(s.y[i]));
    }
  }
  for (const auto& [pos, label] : options.markers) {
    x_min = std::min(x_min, pos);
    x_max = std::max(x_max, pos);
  }
  if (!std::isfinite(x_min)) x_min = 0, x_max = 1;
  if (!std::isfinite(ly_min)) ly_min = -1, ly_max = 0;
  if (x_max <= x_min) x_max = x_min + 1;
  ly_min = std::floor(ly_min);
  ly_max = std::ceil(ly_max);
  if (ly_max <= ly_min) ly_max = ly_min + 1;

  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double ly) {
    return kTop + (ly_max - ly) / (ly_max - ly_min) * plot_h;
  };

  std::string out = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
      "viewBox=\"0 0 %d %d\" font-family=\"sans-serif\" font-size=\"12\">\n",
      options.width, options.height, options.width, options.height);
  if (options.timestamp) {
    absl::StrAppend(&out, "<!-- generated ", Timestamp(), " -->\n");
  }
  absl::StrAppend(&out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  absl::StrAppend(&out, absl::StrFormat(
      "<text x=\"%.1f\" y=\"20\" text-anchor=\"middle\">%s</text>\n", w / 2,
      Escape(options.title)));
  absl::StrAppend(&out, absl::StrFormat(
      "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
      "fill=\"none\" stroke=\"black\"/>\n", kLeft, kTop, plot_w, plot_h));

  // One tick per decade, thinned to at most ten labels.
  const int decades = static_cast<int>(ly_max - ly_min);
  const int stride = std::max(1, (decades + 9) / 10);
  for (int d = 0; d <= decades; d += stride) {
    const double ly = ly_min + d;
    absl::StrAppend(&out, absl::StrFormat(
        "<line x1=\"%.1f\" x2=\"%.1f\" y1=\"%.1f\" y2=\"%.1f\" "
        "stroke=\"#dddddd\"/>\n<text x=\"%.1f\" y=\"%.1f\" "
        "text-anchor=\"end\">1e%d</text>\n",
        kLeft, kLeft + plot_w, py(ly), py(ly), kLeft - 6, py(ly) + 4,
        static_cast<int>(ly)));
  }
  for (int t = 0; t <= 4; ++t) {
    const double x = x_min + (x_max - x_min) * t / 4.0;
    absl::StrAppend(&out, absl::StrFormat(
        "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%.6g</text>\n",
        px(x), kTop + plot_h + 16, x));
  }
  absl::StrAppend(&out, absl::StrFormat(
      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%s</text>\n",
      kLeft + plot_w / 2, h - 8, Escape(options.x_label)));
  absl::StrAppend(&out, absl::StrFormat(
      "<text x=\"14\" y=\"%.1f\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 14 %.1f)\">%s</text>\n",
      kTop + plot_h / 2, kTop + plot_h / 2, Escape(options.y_label)));

  for (size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    std::string points;
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!(s.y[i] > 0.0) || !std::isfinite(s.y[i])) continue;
      absl::StrAppend(&points, absl::StrFormat(
          "%.2f,%.2f ", px(s.x[i]), py(std::log10(s.y[i]))));
    }
    if (!points.empty()) points.pop_back();
    absl::StrAppend(&out, absl::StrFormat(
        "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" "
        "points=\"%s\"/>\n", color, points));
    absl::StrAppend(&out, absl::StrFormat(
        "<text x=\"%.1f\" y=\"%.1f\" fill=\"%s\">%s</text>\n",
        kLeft + plot_w - 150, kTop + 16 + 14.0 * k, color, Escape(s.label)));
  }
  for (const auto& [pos, label] : options.markers) {
    absl::StrAppend(&out, absl::StrFormat(
        "<line x1=\"%.1f\" x2=\"%.1f\" y1=\"%.1f\" y2=\"%.1f\" "
        "stroke=\"#ff7f0e\" stroke-dasharray=\"5,4\"/>\n"
        "<text x=\"%.1f\" y=\"%.1f\" fill=\"#ff7f0e\">%s</text>\n",
        px(pos), px(pos), kTop, kTop + plot_h, px(pos) + 4, kTop + 12,
        Escape(label)));
  }
  absl::StrAppend(&out, "</svg>\n");
  return out;
}

}  // namespace pdhg::tools

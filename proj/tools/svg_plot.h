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


// Minimal SVG line-plot writer with a log-scale y axis.

#ifndef PDHG_TOOLS_SVG_PLOT_H_
#define PDHG_TOOLS_SVG_PLOT_H_

#include <string>
#include <utility>
#include <vector>

namespace pdhg::tools {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  // Non-positive values are dropped from the log-scale plot.
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "iteration";
  std::string y_label = "KKT residual";
  int width = 720;
  int height = 440;
  // Dashed vertical lines, e.g. identification moments.
  std::vector<std::pair<double, std::string>> markers;
  // Adds a generation timestamp as an XML comment.
  bool timestamp = true;
};

std::string RenderLogPlot(const std::vector<PlotSeries>& series,
                          const PlotOptions& options);

}  // namespace pdhg::tools

#endif  // PDHG_TOOLS_SVG_PLOT_H_

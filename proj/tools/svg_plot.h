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

#ifndef PML_TOOLS_SVG_PLOT_H_
#define PML_TOOLS_SVG_PLOT_H_

#include <string>
#include <utility>
#include <vector>

namespace pml::cli {

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  int width = 720;
  int height = 440;
};

// A self-contained SVG document with axes, ticks, one polyline per series
// and a legend. Non-finite points are dropped.
std::string RenderLinePlot(const std::vector<PlotSeries>& series,
                           const PlotOptions& options);

}  // namespace pml::cli

#endif  // PML_TOOLS_SVG_PLOT_H_

// Copyright 2026 The opendata-egt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EGT_SVG_HPP_
#define EGT_SVG_HPP_

#include <array>
#include <string>
#include <vector>

namespace egt::svg {

// Minimal self-contained SVG charts: no scripts, no external references.

struct LineSeries {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  std::vector<LineSeries> series;
};

std::string RenderLineChart(const LineChart& chart);

// Color grid over (column value, row value) with a [value_min, value_max]
// color bar. cells[i][j] belongs to row_values[i], column_values[j]; rows
// are drawn bottom-up so the row axis increases upward.
struct Heatmap {
  std::string title;
  std::string column_label;
  std::string row_label;
  std::vector<double> column_values;
  std::vector<double> row_values;
  std::vector<std::vector<double>> cells;
  double value_min = 0.0;
  double value_max = 1.0;
};

std::string RenderHeatmap(const Heatmap& map);

// Polylines in the unit cube drawn in isometric projection with the cube's
// edges as a frame.
struct Path3D {
  std::string label;
  std::vector<std::array<double, 3>> points;
};

struct Bundle3D {
  std::string title;
  std::array<std::string, 3> axis_labels{"x", "y", "z"};
  std::vector<Path3D> paths;
};

std::string RenderIsometricBundle(const Bundle3D& bundle);

std::string EscapeXml(const std::string& text);

}  // namespace egt::svg

#endif  // EGT_SVG_HPP_

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

#include "egt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace egt::svg {
namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string TickLabel(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string Header(int width, int height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  return os.str();
}

std::string Text(double x, double y, const std::string& body, const char* anchor = "middle",
                 int size = 12, const std::string& extra = "") {
  std::ostringstream os;
  os << "<text x=\"" << Num(x) << "\" y=\"" << Num(y) << "\" font-size=\"" << size
     << "\" text-anchor=\"" << anchor << "\"" << extra << '>' << EscapeXml(body) << "</text>\n";
  return os.str();
}

std::string Line(double x1, double y1, double x2, double y2, const char* stroke = "black",
                 double width = 1.0) {
  std::ostringstream os;
  os << "<line x1=\"" << Num(x1) << "\" y1=\"" << Num(y1) << "\" x2=\"" << Num(x2)
     << "\" y2=\"" << Num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
     << "\"/>\n";
  return os.str();
}

// Piecewise-linear approximation of the viridis map.
std::string HeatColor(double t) {
  if (std::isnan(t)) return "#bbbbbb";
  static constexpr std::array<std::array<double, 3>, 5> stops = {{{68, 1, 84},
                                                                  {59, 82, 139},
                                                                  {33, 145, 140},
                                                                  {94, 201, 98},
                                                                  {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(i);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]))),
                static_cast<int>(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]))),
                static_cast<int>(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]))));
  return buf;
}

}  // namespace

std::string EscapeXml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c; break;
    }
  }
  return out;
}

std::string RenderLineChart(const LineChart& chart) {
  constexpr int kWidth = 720, kHeight = 480;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double x_span = chart.x_max > chart.x_min ? chart.x_max - chart.x_min : 1.0;
  const double y_span = chart.y_max > chart.y_min ? chart.y_max - chart.y_min : 1.0;
  auto px = [&](double x) { return kLeft + (x - chart.x_min) / x_span * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - chart.y_min) / y_span * plot_h; };

  std::ostringstream os;
  os << Header(kWidth, kHeight);
  os << Text(kWidth / 2.0, 24, chart.title, "middle", 15);
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
     << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = chart.x_min + x_span * i / kTicks;
    const double yv = chart.y_min + y_span * i / kTicks;
    os << Line(px(xv), kTop + plot_h, px(xv), kTop + plot_h + 5);
    os << Text(px(xv), kTop + plot_h + 20, TickLabel(xv));
    os << Line(kLeft - 5, py(yv), kLeft, py(yv));
    os << Text(kLeft - 8, py(yv) + 4, TickLabel(yv), "end");
  }
  os << Text(kLeft + plot_w / 2, kHeight - 15, chart.x_label, "middle", 13);
  os << Text(18, kTop + plot_h / 2, chart.y_label, "middle", 13,
             " transform=\"rotate(-90 18 " + Num(kTop + plot_h / 2) + ")\"");

  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const LineSeries& series = chart.series[s];
    const char* color = kPalette[s % kPalette.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < series.xs.size() && i < series.ys.size(); ++i) {
      if (!std::isfinite(series.ys[i])) continue;
      os << Num(px(series.xs[i])) << ',' << Num(py(series.ys[i])) << ' ';
    }
    os << "\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(s);
    os << Line(kLeft + plot_w + 15, ly, kLeft + plot_w + 40, ly, color, 2.0);
    os << Text(kLeft + plot_w + 46, ly + 4, series.label, "start");
  }
  os << "</svg>\n";
  return os.str();
}

std::string RenderHeatmap(const Heatmap& map) {
  constexpr int kWidth = 640, kHeight = 560;
  constexpr double kLeft = 70, kTop = 40, kPlot = 440, kBarX = 540, kBarW = 20;
  const std::size_t rows = map.row_values.size();
  const std::size_t cols = map.column_values.size();
  const double cell_w = cols ? kPlot / static_cast<double>(cols) : kPlot;
  const double cell_h = rows ? kPlot / static_cast<double>(rows) : kPlot;
  const double span = map.value_max > map.value_min ? map.value_max - map.value_min : 1.0;

  std::ostringstream os;
  os << Header(kWidth, kHeight);
  os << Text(kLeft + kPlot / 2, 24, map.title, "middle", 15);
  for (std::size_t i = 0; i < rows && i < map.cells.size(); ++i) {
    for (std::size_t j = 0; j < cols && j < map.cells[i].size(); ++j) {
      const double y = kTop + kPlot - static_cast<double>(i + 1) * cell_h;
      os << "<rect x=\"" << Num(kLeft + static_cast<double>(j) * cell_w) << "\" y=\"" << Num(y)
         << "\" width=\"" << Num(cell_w + 0.3) << "\" height=\"" << Num(cell_h + 0.3)
         << "\" fill=\"" << HeatColor((map.cells[i][j] - map.value_min) / span) << "\"/>\n";
    }
  }
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlot << "\" height=\""
     << kPlot << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 4;
  if (cols > 0) {
    for (int t = 0; t <= kTicks; ++t) {
      const std::size_t j = (cols - 1) * t / kTicks;
      const double x = kLeft + (static_cast<double>(j) + 0.5) * cell_w;
      os << Line(x, kTop + kPlot, x, kTop + kPlot + 5);
      os << Text(x, kTop + kPlot + 20, TickLabel(map.column_values[j]));
    }
  }
  if (rows > 0) {
    for (int t = 0; t <= kTicks; ++t) {
      const std::size_t i = (rows - 1) * t / kTicks;
      const double y = kTop + kPlot - (static_cast<double>(i) + 0.5) * cell_h;
      os << Line(kLeft - 5, y, kLeft, y);
      os << Text(kLeft - 8, y + 4, TickLabel(map.row_values[i]), "end");
    }
  }
  os << Text(kLeft + kPlot / 2, kTop + kPlot + 45, map.column_label, "middle", 13);
  os << Text(20, kTop + kPlot / 2, map.row_label, "middle", 13,
             " transform=\"rotate(-90 20 " + Num(kTop + kPlot / 2) + ")\"");

  constexpr int kBarSteps = 50;
  for (int k = 0; k < kBarSteps; ++k) {
    const double frac = (k + 0.5) / kBarSteps;
    const double y = kTop + kPlot - static_cast<double>(k + 1) * kPlot / kBarSteps;
    os << "<rect x=\"" << kBarX << "\" y=\"" << Num(y) << "\" width=\"" << kBarW
       << "\" height=\"" << Num(kPlot / kBarSteps + 0.3) << "\" fill=\"" << HeatColor(frac)
       << "\"/>\n";
  }
  os << "<rect x=\"" << kBarX << "\" y=\"" << kTop << "\" width=\"" << kBarW << "\" height=\""
     << kPlot << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= kTicks; ++t) {
    const double v = map.value_min + span * t / kTicks;
    const double y = kTop + kPlot - kPlot * t / kTicks;
    os << Line(kBarX + kBarW, y, kBarX + kBarW + 4, y);
    os << Text(kBarX + kBarW + 7, y + 4, TickLabel(v), "start");
  }
  os << "</svg>\n";
  return os.str();
}

std::string RenderIsometricBundle(const Bundle3D& bundle) {
  constexpr int kWidth = 640, kHeight = 560;
  constexpr double kScale = 220, kOriginX = 320, kOriginY = 400;
  const double c30 = std::cos(std::numbers::pi / 6), s30 = std::sin(std::numbers::pi / 6);
  auto project = [&](const std::array<double, 3>& p) {
    return std::array<double, 2>{kOriginX + (p[0] - p[1]) * c30 * kScale,
                                 kOriginY + (p[0] + p[1]) * s30 * kScale - p[2] * kScale};
  };

  std::ostringstream os;
  os << Header(kWidth, kHeight);
  os << Text(kWidth / 2.0, 24, bundle.title, "middle", 15);

  // Cube frame: the 12 edges between vertices differing in one coordinate.
  for (int a = 0; a < 8; ++a) {
    for (int bit = 0; bit < 3; ++bit) {
      const int b = a | (1 << bit);
      if (b == a) continue;
      auto vertex = [](int v) {
        return std::array<double, 3>{static_cast<double>((v >> 0) & 1),
                                     static_cast<double>((v >> 1) & 1),
                                     static_cast<double>((v >> 2) & 1)};
      };
      const auto p = project(vertex(a));
      const auto q = project(vertex(b));
      os << Line(p[0], p[1], q[0], q[1], "#999999", 1.0);
    }
  }
  const std::array<std::array<double, 3>, 3> axis_tips = {
      {{1.12, 0, 0}, {0, 1.12, 0}, {0, 0, 1.08}}};
  for (int k = 0; k < 3; ++k) {
    const auto tip = project(axis_tips[k]);
    os << Text(tip[0], tip[1], bundle.axis_labels[k], "middle", 14);
  }
  const auto origin = project({0, 0, 0});
  os << Text(origin[0], origin[1] + 18, "0", "middle", 11);

  for (std::size_t s = 0; s < bundle.paths.size(); ++s) {
    const Path3D& path = bundle.paths[s];
    const char* color = kPalette[s % kPalette.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& point : path.points) {
      const auto q = project(point);
      os << Num(q[0]) << ',' << Num(q[1]) << ' ';
    }
    os << "\"/>\n";
    if (!path.points.empty()) {
      const auto end = project(path.points.back());
      os << "<circle cx=\"" << Num(end[0]) << "\" cy=\"" << Num(end[1])
         << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    }
    const double ly = 50 + 20.0 * static_cast<double>(s);
    os << Line(20, ly, 45, ly, color, 2.0);
    os << Text(51, ly + 4, path.label, "start");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace egt::svg

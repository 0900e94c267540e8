// Copyright 2026 The dpsp Authors
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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dpsp/bench.h"
#include "dpsp/graph_io.h"

namespace dpsp {

namespace {

constexpr double kPanelWidth = 560.0;
constexpr double kPanelHeight = 420.0;
constexpr double kMarginLeft = 78.0;
constexpr double kMarginRight = 18.0;
constexpr double kMarginTop = 42.0;
constexpr double kMarginBottom = 58.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string FormatTick(double value) {
  char buffer[32];
  if (value != 0.0 && (std::abs(value) >= 1e5 || std::abs(value) < 1e-3)) {
    std::snprintf(buffer, sizeof(buffer), "%.1e", value);
  } else {
    std::snprintf(buffer, sizeof(buffer), "%g", value);
  }
  return buffer;
}

std::vector<double> NiceTicks(double low, double high, int target) {
  const double span = high - low;
  const double raw_step = span / std::max(target - 1, 1);
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw_step)));
  double step = magnitude;
  for (double multiple : {1.0, 2.0, 5.0, 10.0}) {
    if (magnitude * multiple >= raw_step) {
      step = magnitude * multiple;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(low / step) * step; t <= high + step * 1e-9; t += step) {
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return ticks;
}

struct SeriesCurves {
  PlotSeries empirical;
  std::vector<std::pair<int, double>> linear_reference;
  std::vector<std::pair<int, double>> sqrtlog_reference;
};

std::vector<SeriesCurves> BuildCurves(const std::vector<ErrorRecord>& records) {
  std::vector<SeriesCurves> curves;
  for (PlotSeries& series : AggregateSeries(records)) {
    SeriesCurves c;
    const auto [n0, err0] = series.points.front();
    for (const auto& [n, value] : series.points) {
      c.linear_reference.emplace_back(n, LinearReference(n, n0, err0));
      c.sqrtlog_reference.emplace_back(n, SqrtLogSquaredReference(n, n0, err0));
    }
    c.empirical = std::move(series);
    curves.push_back(std::move(c));
  }
  return curves;
}

class PanelRenderer {
 public:
  PanelRenderer(std::ostream& out, double origin_x, const PlotPanel& panel)
      : out_(out), origin_x_(origin_x), curves_(BuildCurves(panel.records)) {
    double x_low = 1e300, x_high = -1e300, y_low = 0.0, y_high = -1e300;
    for (const SeriesCurves& c : curves_) {
      for (const auto& list :
           {c.empirical.points, c.linear_reference, c.sqrtlog_reference}) {
        for (const auto& [n, value] : list) {
          x_low = std::min(x_low, static_cast<double>(n));
          x_high = std::max(x_high, static_cast<double>(n));
          y_high = std::max(y_high, value);
        }
      }
    }
    if (x_high <= x_low) {
      x_low -= 1.0;
      x_high += 1.0;
    }
    if (y_high <= y_low) y_high = y_low + 1.0;
    x_low_ = x_low;
    x_high_ = x_high;
    y_low_ = y_low;
    y_high_ = y_high * 1.05;
    title_ = panel.title;
  }

  void Render() {
    out_ << "<g transform=\"translate(" << origin_x_ << ",0)\">\n";
    Frame();
    Axes();
    int color_index = 0;
    for (const SeriesCurves& c : curves_) {
      const char* color = kPalette[color_index % 8];
      Polyline(c.linear_reference, color, "8,4", 1.2);
      Polyline(c.sqrtlog_reference, color, "2,4", 1.2);
      Polyline(c.empirical.points, color, "", 2.0);
      Markers(c.empirical.points, color);
      ++color_index;
    }
    Legend();
    out_ << "</g>\n";
  }

 private:
  double X(double n) const {
    return kMarginLeft +
           (n - x_low_) / (x_high_ - x_low_) * (kPanelWidth - kMarginLeft - kMarginRight);
  }
  double Y(double value) const {
    return kPanelHeight - kMarginBottom -
           (value - y_low_) / (y_high_ - y_low_) *
               (kPanelHeight - kMarginTop - kMarginBottom);
  }

  void Frame() {
    out_ << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
         << kPanelWidth - kMarginLeft - kMarginRight << "\" height=\""
         << kPanelHeight - kMarginTop - kMarginBottom
         << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    if (!title_.empty()) {
      out_ << "<text x=\"" << (kMarginLeft + kPanelWidth - kMarginRight) / 2.0
           << "\" y=\"" << kMarginTop - 14.0
           << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">"
           << title_ << "</text>\n";
    }
  }

  void Axes() {
    for (double t : NiceTicks(x_low_, x_high_, 6)) {
      const double x = X(t);
      out_ << "<line x1=\"" << x << "\" y1=\"" << kPanelHeight - kMarginBottom
           << "\" x2=\"" << x << "\" y2=\"" << kPanelHeight - kMarginBottom + 5
           << "\" stroke=\"#333333\"/>\n";
      out_ << "<text x=\"" << x << "\" y=\"" << kPanelHeight - kMarginBottom + 19
           << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
           << FormatTick(t) << "</text>\n";
    }
    for (double t : NiceTicks(y_low_, y_high_, 6)) {
      const double y = Y(t);
      out_ << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << y << "\" x2=\""
           << kMarginLeft << "\" y2=\"" << y << "\" stroke=\"#333333\"/>\n";
      out_ << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << y + 4
           << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
           << FormatTick(t) << "</text>\n";
    }
    out_ << "<text x=\"" << (kMarginLeft + kPanelWidth - kMarginRight) / 2.0 << "\" y=\""
         << kPanelHeight - 16.0
         << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">"
            "graph size n</text>\n";
    out_ << "<text x=\"16\" y=\"" << (kMarginTop + kPanelHeight - kMarginBottom) / 2.0
         << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
            "transform=\"rotate(-90 16 "
         << (kMarginTop + kPanelHeight - kMarginBottom) / 2.0
         << ")\">mean max absolute error</text>\n";
  }

  void Polyline(const std::vector<std::pair<int, double>>& points, const char* color,
                const std::string& dash, double width) {
    if (points.empty()) return;
    if (points.size() == 1) return;  // reference/series degenerate to markers
    out_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
         << "\"";
    if (!dash.empty()) out_ << " stroke-dasharray=\"" << dash << "\"";
    out_ << " points=\"";
    for (const auto& [n, value] : points) {
      out_ << X(n) << ',' << Y(value) << ' ';
    }
    out_ << "\"/>\n";
  }

  void Markers(const std::vector<std::pair<int, double>>& points, const char* color) {
    for (const auto& [n, value] : points) {
      out_ << "<circle cx=\"" << X(n) << "\" cy=\"" << Y(value) << "\" r=\"2.8\" fill=\""
           << color << "\"/>\n";
    }
  }

  void Legend() {
    double y = kMarginTop + 16.0;
    const double x = kMarginLeft + 12.0;
    int color_index = 0;
    for (const SeriesCurves& c : curves_) {
      const char* color = kPalette[color_index % 8];
      out_ << "<line x1=\"" << x << "\" y1=\"" << y - 4 << "\" x2=\"" << x + 24
           << "\" y2=\"" << y - 4 << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
      std::ostringstream label;
      label << c.empirical.mechanism << ", eps=" << FormatTick(c.empirical.epsilon);
      out_ << "<text x=\"" << x + 30 << "\" y=\"" << y
           << "\" font-size=\"11\" font-family=\"sans-serif\">" << label.str()
           << "</text>\n";
      y += 15.0;
      ++color_index;
    }
    out_ << "<text x=\"" << x << "\" y=\"" << y
         << "\" font-size=\"11\" font-family=\"sans-serif\">dashed: n rate, "
            "dotted: sqrt(n) log^2 n rate</text>\n";
  }

  std::ostream& out_;
  double origin_x_;
  std::vector<SeriesCurves> curves_;
  double x_low_, x_high_, y_low_, y_high_;
  std::string title_;
};

std::string DataFilePath(const std::string& svg_path) {
  const size_t dot = svg_path.find_last_of('.');
  const size_t slash = svg_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return svg_path + ".dat";
  }
  return svg_path.substr(0, dot) + ".dat";
}

void WriteDataFile(const std::vector<PlotPanel>& panels, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "# columns: n mean_max_abs_error ref_linear ref_sqrt_log2\n";
  for (const PlotPanel& panel : panels) {
    for (const SeriesCurves& c : BuildCurves(panel.records)) {
      out << "# panel \"" << panel.title << "\" mechanism " << c.empirical.mechanism
          << " epsilon " << FormatDouble(c.empirical.epsilon) << '\n';
      for (size_t i = 0; i < c.empirical.points.size(); ++i) {
        out << c.empirical.points[i].first << ' '
            << FormatDouble(c.empirical.points[i].second) << ' '
            << FormatDouble(c.linear_reference[i].second) << ' '
            << FormatDouble(c.sqrtlog_reference[i].second) << '\n';
      }
      out << "\n\n";
    }
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace

void EmitPlotPanels(const std::vector<PlotPanel>& panels, const std::string& path) {
  if (panels.empty()) {
    throw std::invalid_argument("EmitPlotPanels: no panels");
  }
  for (const PlotPanel& panel : panels) {
    if (panel.records.empty()) {
      throw std::invalid_argument("EmitPlotPanels: empty record set");
    }
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  const double total_width = kPanelWidth * panels.size();
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_width
      << "\" height=\"" << kPanelHeight << "\" viewBox=\"0 0 " << total_width << ' '
      << kPanelHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (size_t i = 0; i < panels.size(); ++i) {
    PanelRenderer renderer(out, kPanelWidth * i, panels[i]);
    renderer.Render();
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error(path + ": write failed");
  WriteDataFile(panels, DataFilePath(path));
}

void EmitPlot(const std::vector<ErrorRecord>& records, const std::string& path) {
  if (records.empty()) {
    throw std::invalid_argument("EmitPlot: empty record set");
  }
  EmitPlotPanels({PlotPanel{"", records}}, path);
}

}  // namespace dpsp

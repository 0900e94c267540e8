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

#ifndef DPSP_BENCH_H_
#define DPSP_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dpsp {

// One grid of benchmark runs: a graph family swept over sizes, a set of
// mechanisms and epsilon values, repeated with fresh weights per repetition.
// All randomness derives from master_seed, so a config identifies its
// results exactly.
struct ExperimentConfig {
  std::string family;               // multi_stage | random_tree | connected_random
  double weight_low = 0.0;
  double weight_high = 0.0;
  std::vector<int> sizes;           // target n per grid point
  std::vector<std::string> mechanisms;  // alg1 | alg2 | edge_baseline | output_baseline
  std::vector<double> epsilons;
  double delta = 0.0;
  double gamma = 0.0;
  int repetitions = 0;
  uint64_t master_seed = 0;
  std::string output_dir = ".";
  int extra_edges = 0;              // connected_random only

  // Throws std::invalid_argument on any malformed field.
  void Validate() const;
};

// Flat key = value text config; '#' starts a comment, list values are
// comma-separated. Unknown keys are rejected.
ExperimentConfig ParseConfig(std::istream& in);
ExperimentConfig ParseConfigFile(const std::string& path);
ExperimentConfig ParseConfigString(const std::string& text);

// CI-scale default grid (sizes up to ~500, 50 repetitions).
ExperimentConfig CiPreset();
// One panel of the two-panel error-growth figure: 0 = Uniform(2000, 3000)
// weights, 1 = Uniform(1e4, 1e5). 200 repetitions, sizes up to ~1000.
ExperimentConfig Figure1Preset(int panel);

struct ErrorRecord {
  std::string mechanism;
  int n = 0;
  double epsilon = 0.0;
  int rep = 0;
  double max_abs_error = 0.0;
  double mean_abs_error = 0.0;
  double runtime_ms = 0.0;
  int clamped_count = 0;

  friend bool operator==(const ErrorRecord&, const ErrorRecord&) = default;
};

// Runs the grid: per (size, repetition) generate one graph and its exact
// APSP, then run every (mechanism, epsilon) against it. Substreams are pure
// functions of (master_seed, size index, repetition, mechanism, epsilon
// index), so results are independent of execution order and of the
// repetition count. runtime_ms covers the mechanism only. Records are
// returned sorted by (mechanism, n, epsilon, rep).
std::vector<ErrorRecord> RunExperiment(const ExperimentConfig& cfg);

// CSV with header mechanism,n,epsilon,rep,max_abs_error,mean_abs_error,
// runtime_ms,clamped_count; doubles at 17 significant digits.
void EmitCsv(const std::vector<ErrorRecord>& records, const std::string& path);
std::vector<ErrorRecord> ParseCsv(const std::string& path);

// Reference growth values anchored at (n0, err0): err0 * (n / n0) and
// err0 * (sqrt(n) ln^2 n) / (sqrt(n0) ln^2 n0).
double LinearReference(double n, double n0, double err0);
double SqrtLogSquaredReference(double n, double n0, double err0);

// One curve of the plot: mean max-error per size for one (mechanism,
// epsilon) cell, points sorted by n.
struct PlotSeries {
  std::string mechanism;
  double epsilon = 0.0;
  std::vector<std::pair<int, double>> points;
};
std::vector<PlotSeries> AggregateSeries(const std::vector<ErrorRecord>& records);

struct PlotPanel {
  std::string title;
  std::vector<ErrorRecord> records;
};

// Self-contained SVG: per (mechanism, epsilon) a solid empirical curve plus
// dashed linear and dotted sqrt(n) ln^2 n references anchored at its first
// point. A gnuplot-readable .dat file with the same numbers is written next
// to the SVG. Rejects empty input.
void EmitPlot(const std::vector<ErrorRecord>& records, const std::string& path);
void EmitPlotPanels(const std::vector<PlotPanel>& panels, const std::string& path);

}  // namespace dpsp

#endif  // DPSP_BENCH_H_

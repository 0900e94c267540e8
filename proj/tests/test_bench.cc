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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dpsp/bench.h"

using dpsp::AggregateSeries;
using dpsp::ErrorRecord;
using dpsp::ExperimentConfig;
using dpsp::LinearReference;
using dpsp::ParseConfigString;
using dpsp::PlotSeries;
using dpsp::RunExperiment;
using dpsp::SqrtLogSquaredReference;

namespace {

ExperimentConfig TinyConfig() {
  ExperimentConfig cfg;
  cfg.family = "multi_stage";
  cfg.weight_low = 2000.0;
  cfg.weight_high = 3000.0;
  cfg.sizes = {31};
  cfg.mechanisms = {"alg1"};
  cfg.epsilons = {1.0, 2.0};
  cfg.delta = 0.01;
  cfg.gamma = 0.01;
  cfg.repetitions = 1;
  cfg.master_seed = 99;
  return cfg;
}

bool SameModuloRuntime(std::vector<ErrorRecord> a, std::vector<ErrorRecord> b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    a[i].runtime_ms = 0.0;
    b[i].runtime_ms = 0.0;
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("grid arithmetic: one record per epsilon") {
  const std::vector<ErrorRecord> records = RunExperiment(TinyConfig());
  CHECK(records.size() == 2);
  CHECK(records[0].n == 31);
  CHECK(records[0].mechanism == "alg1");
  CHECK(records[0].max_abs_error >= records[0].mean_abs_error);
  CHECK(records[0].mean_abs_error >= 0.0);
}

TEST_CASE("same config twice gives identical results") {
  const ExperimentConfig cfg = TinyConfig();
  CHECK(SameModuloRuntime(RunExperiment(cfg), RunExperiment(cfg)));
}

TEST_CASE("earlier repetitions are stable when the count grows") {
  ExperimentConfig two = TinyConfig();
  two.repetitions = 2;
  ExperimentConfig three = TinyConfig();
  three.repetitions = 3;
  const std::vector<ErrorRecord> short_run = RunExperiment(two);
  std::vector<ErrorRecord> long_run = RunExperiment(three);
  for (const ErrorRecord& record : short_run) {
    bool found = false;
    for (ErrorRecord& candidate : long_run) {
      if (candidate.mechanism == record.mechanism && candidate.n == record.n &&
          candidate.epsilon == record.epsilon && candidate.rep == record.rep) {
        found = candidate.max_abs_error == record.max_abs_error &&
                candidate.mean_abs_error == record.mean_abs_error &&
                candidate.clamped_count == record.clamped_count;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("multi-stage sizes land on n = 10 * stages + 1") {
  ExperimentConfig cfg = TinyConfig();
  cfg.sizes = {100};
  const std::vector<ErrorRecord> records = RunExperiment(cfg);
  CHECK(records[0].n == 101);  // actual n is reported, not the target
}

TEST_CASE("csv round trip and header-only file") {
  ExperimentConfig cfg = TinyConfig();
  cfg.repetitions = 2;
  const std::vector<ErrorRecord> records = RunExperiment(cfg);
  const std::string path = "bench_roundtrip.csv";
  dpsp::EmitCsv(records, path);
  CHECK(dpsp::ParseCsv(path) == records);

  dpsp::EmitCsv({}, path);
  CHECK(Slurp(path) ==
        "mechanism,n,epsilon,rep,max_abs_error,mean_abs_error,runtime_ms,"
        "clamped_count\n");
  CHECK(dpsp::ParseCsv(path).empty());
  std::remove(path.c_str());
}

TEST_CASE("config parsing: full file with comments") {
  const ExperimentConfig cfg = ParseConfigString(
      "# benchmark grid\n"
      "family = multi_stage\n"
      "weight_low = 2000\n"
      "weight_high = 3000\n"
      "sizes = 101, 201\n"
      "mechanisms = alg1, edge_baseline  # both curves\n"
      "epsilons = 1, 2\n"
      "delta = 0.01\n"
      "gamma = 0.01\n"
      "repetitions = 5\n"
      "master_seed = 42\n"
      "output_dir = out\n");
  CHECK(cfg.family == "multi_stage");
  CHECK(cfg.sizes == std::vector<int>{101, 201});
  CHECK(cfg.mechanisms == std::vector<std::string>{"alg1", "edge_baseline"});
  CHECK(cfg.epsilons == std::vector<double>{1.0, 2.0});
  CHECK(cfg.repetitions == 5);
  CHECK(cfg.master_seed == 42);
  CHECK(cfg.output_dir == "out");
}

TEST_CASE("config parsing rejects bad input before any run") {
  CHECK_THROWS(ParseConfigString("family = multi_stage\n"));  // missing keys
  CHECK_THROWS(ParseConfigString(
      "family = warp_drive\nweight_low = 1\nweight_high = 2\nsizes = 10\n"
      "mechanisms = alg1\nepsilons = 1\ndelta = 0.01\ngamma = 0.01\n"
      "repetitions = 1\nmaster_seed = 1\n"));
  CHECK_THROWS(ParseConfigString(
      "family = random_tree\nweight_low = 1\nweight_high = 2\nsizes = 10\n"
      "mechanisms = alg3\nepsilons = 1\ndelta = 0.01\ngamma = 0.01\n"
      "repetitions = 1\nmaster_seed = 1\n"));
  CHECK_THROWS(ParseConfigString(
      "family = random_tree\nweight_low = 1\nweight_high = 2\nsizes = 10\n"
      "mechanisms = alg1\nepsilons = 1\ndelta = 0.01\ngamma = 0.01\n"
      "repetitions = 1\nmaster_seed = 1\nwarp_factor = 9\n"));
}

TEST_CASE("reference curves follow the anchoring formulas") {
  CHECK(LinearReference(801.0, 101.0, 5.0) == doctest::Approx(5.0 * 801.0 / 101.0));
  const double expected = 5.0 * (std::sqrt(801.0) * std::log(801.0) * std::log(801.0)) /
                          (std::sqrt(101.0) * std::log(101.0) * std::log(101.0));
  CHECK(SqrtLogSquaredReference(801.0, 101.0, 5.0) == doctest::Approx(expected));
  CHECK(SqrtLogSquaredReference(101.0, 101.0, 5.0) == doctest::Approx(5.0));
}

TEST_CASE("series aggregation averages max error over repetitions") {
  std::vector<ErrorRecord> records;
  records.push_back({"alg1", 101, 1.0, 0, 10.0, 1.0, 0.0, 0});
  records.push_back({"alg1", 101, 1.0, 1, 20.0, 2.0, 0.0, 0});
  records.push_back({"alg1", 201, 1.0, 0, 40.0, 4.0, 0.0, 0});
  records.push_back({"edge_baseline", 101, 1.0, 0, 7.0, 0.5, 0.0, 0});
  const std::vector<PlotSeries> series = AggregateSeries(records);
  REQUIRE(series.size() == 2);
  CHECK(series[0].mechanism == "alg1");
  REQUIRE(series[0].points.size() == 2);
  CHECK(series[0].points[0] == std::pair<int, double>{101, 15.0});
  CHECK(series[0].points[1] == std::pair<int, double>{201, 40.0});
  CHECK(series[1].mechanism == "edge_baseline");
}

TEST_CASE("plot emission: svg and dat files, single point included") {
  std::vector<ErrorRecord> records;
  records.push_back({"alg1", 101, 1.0, 0, 10.0, 1.0, 0.0, 0});
  const std::string path = "bench_plot.svg";
  dpsp::EmitPlot(records, path);
  const std::string svg = Slurp(path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);  // the degenerate point
  const std::string dat = Slurp("bench_plot.dat");
  CHECK(dat.find("mechanism alg1") != std::string::npos);
  std::remove(path.c_str());
  std::remove("bench_plot.dat");
}

TEST_CASE("plot emission rejects empty input") {
  CHECK_THROWS(dpsp::EmitPlot({}, "never_written.svg"));
}

TEST_CASE("two-panel output holds both titles") {
  std::vector<ErrorRecord> left, right;
  left.push_back({"alg1", 101, 1.0, 0, 10.0, 1.0, 0.0, 0});
  left.push_back({"alg1", 201, 1.0, 0, 15.0, 1.5, 0.0, 0});
  right.push_back({"alg1", 101, 1.0, 0, 12.0, 1.2, 0.0, 0});
  right.push_back({"alg1", 201, 1.0, 0, 14.0, 1.4, 0.0, 0});
  const std::string path = "bench_panels.svg";
  dpsp::EmitPlotPanels({{"left panel", left}, {"right panel", right}}, path);
  const std::string svg = Slurp(path);
  CHECK(svg.find("left panel") != std::string::npos);
  CHECK(svg.find("right panel") != std::string::npos);
  std::remove(path.c_str());
  std::remove("bench_panels.dat");
}

TEST_CASE("presets validate and differ in their weight regimes") {
  CHECK_NOTHROW(dpsp::CiPreset().Validate());
  CHECK_NOTHROW(dpsp::Figure1Preset(0).Validate());
  CHECK_NOTHROW(dpsp::Figure1Preset(1).Validate());
  CHECK(dpsp::Figure1Preset(0).weight_low == 2000.0);
  CHECK(dpsp::Figure1Preset(1).weight_low == 1e4);
  CHECK(dpsp::Figure1Preset(0).repetitions == 200);
  CHECK_THROWS(dpsp::Figure1Preset(2));
}

TEST_CASE("all four mechanisms run end to end on a small grid") {
  ExperimentConfig cfg;
  cfg.family = "connected_random";
  cfg.extra_edges = 3;
  cfg.weight_low = 1.0;
  cfg.weight_high = 10.0;
  cfg.sizes = {24};
  cfg.mechanisms = {"alg1", "alg2", "edge_baseline", "output_baseline"};
  cfg.epsilons = {1.0};
  cfg.delta = 0.01;
  cfg.gamma = 0.01;
  cfg.repetitions = 2;
  cfg.master_seed = 5;
  const std::vector<ErrorRecord> records = RunExperiment(cfg);
  CHECK(records.size() == 8);
  for (const ErrorRecord& r : records) {
    CHECK(r.max_abs_error >= 0.0);
    CHECK(r.max_abs_error >= r.mean_abs_error);
  }
}

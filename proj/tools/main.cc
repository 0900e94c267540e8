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

// Benchmark and release CLI for differentially private all-pairs shortest
// path distances.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpsp/bench.h"
#include "dpsp/fvs_release.h"
#include "dpsp/graph_io.h"
#include "dpsp/shortcut_release.h"

namespace {

// Precedence: --output-dir flag, then DPSP_OUTPUT_DIR, then the config value.
std::string ResolveOutputDir(const std::string& flag_value,
                             const std::string& config_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("DPSP_OUTPUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return config_value.empty() ? "." : config_value;
}

// The persisted results CSV must be byte-identical across reruns of the same
// config, so wall-clock timings go to a separate timings.csv instead.
std::vector<dpsp::ErrorRecord> WithoutTimings(std::vector<dpsp::ErrorRecord> records) {
  for (dpsp::ErrorRecord& r : records) r.runtime_ms = 0.0;
  return records;
}

void WriteRunOutputs(const std::vector<dpsp::ErrorRecord>& records,
                     const std::string& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  dpsp::EmitCsv(WithoutTimings(records), dir + "/" + stem + ".csv");
  dpsp::EmitCsv(records, dir + "/" + stem + "_timings.csv");
}

int RunCommand(const std::string& config_path, const std::string& preset,
               const std::string& output_dir_flag) {
  if (config_path.empty() == preset.empty()) {
    std::cerr << "run: pass exactly one of <config-file> or --preset" << std::endl;
    return 2;
  }

  if (preset == "figure1") {
    const std::vector<std::string> titles = {"weights Unif(2000, 3000)",
                                             "weights Unif(1e4, 1e5)"};
    std::vector<dpsp::PlotPanel> panels;
    std::string dir;
    for (int panel = 0; panel < 2; ++panel) {
      dpsp::ExperimentConfig cfg = dpsp::Figure1Preset(panel);
      dir = ResolveOutputDir(output_dir_flag, cfg.output_dir);
      std::cerr << "running figure1 panel " << panel << " (" << titles[panel]
                << ", 200 repetitions; this takes a few minutes)" << std::endl;
      std::vector<dpsp::ErrorRecord> records = dpsp::RunExperiment(cfg);
      WriteRunOutputs(records, dir, "results_panel" + std::to_string(panel));
      panels.push_back({titles[panel], std::move(records)});
    }
    dpsp::EmitPlotPanels(panels, dir + "/error_growth.svg");
    std::cout << "wrote " << dir << "/results_panel{0,1}.csv and " << dir
              << "/error_growth.svg" << std::endl;
    return 0;
  }

  dpsp::ExperimentConfig cfg;
  if (!preset.empty()) {
    if (preset != "ci") {
      std::cerr << "run: unknown preset \"" << preset << "\" (want ci or figure1)"
                << std::endl;
      return 2;
    }
    cfg = dpsp::CiPreset();
  } else {
    cfg = dpsp::ParseConfigFile(config_path);
  }
  const std::string dir = ResolveOutputDir(output_dir_flag, cfg.output_dir);
  const std::vector<dpsp::ErrorRecord> records = dpsp::RunExperiment(cfg);
  WriteRunOutputs(records, dir, "results");
  dpsp::EmitPlot(records, dir + "/results.svg");
  std::cout << "wrote " << dir << "/results.csv, " << dir << "/results_timings.csv, "
            << dir << "/results.svg" << std::endl;
  return 0;
}

int ReleaseCommand(const std::string& graph_path, const std::string& mechanism,
                   double epsilon, double delta, double gamma, uint64_t seed,
                   const std::string& out_path) {
  const dpsp::Graph g = dpsp::ReadGraphFile(graph_path);
  const dpsp::PrivacyBudget budget{epsilon, delta, gamma};
  dpsp::RandomStream rng(seed);
  if (mechanism == "alg1") {
    const dpsp::SyntheticGraph sg = dpsp::ReleaseSyntheticGraph(g, budget, rng);
    dpsp::WriteSyntheticGraphFile(sg, out_path);
    std::cout << "published synthetic graph: " << sg.shortcut_vertices.size()
              << " shortcut vertices, " << sg.base.NumEdges() << " edges, "
              << sg.clamped_count << " clamped weights -> " << out_path << std::endl;
    return 0;
  }
  if (mechanism == "alg2") {
    dpsp::FvsReleaseDiagnostics diag;
    const dpsp::DistanceMatrix released = dpsp::FvsPrivateApsp(g, budget, rng, &diag);
    dpsp::WriteDistanceMatrixFile(released, out_path);
    std::cout << "published distance matrix: |S| = " << diag.fvs.size() << ", "
              << diag.clamped_count << " clamped entries -> " << out_path << std::endl;
    if (diag.large_fvs) {
      std::cerr << "warning: feedback vertex set has size >= sqrt(n); "
                   "the alg1 mechanism's error bound dominates here"
                << std::endl;
    }
    return 0;
  }
  std::cerr << "release: unknown mechanism \"" << mechanism << "\" (want alg1 or alg2)"
            << std::endl;
  return 2;
}

int FvsCommand(const std::string& graph_path) {
  const dpsp::Graph g = dpsp::ReadGraphFile(graph_path);
  const std::vector<int> fvs = dpsp::ComputeFvs2Approx(g);
  const dpsp::FvsDecomposition dec = dpsp::DecomposeByFvs(g, fvs);
  std::cout << "n = " << g.NumVertices() << ", m = " << g.NumEdges() << '\n';
  std::cout << "feedback vertex set size " << fvs.size() << ":";
  for (int v : fvs) std::cout << ' ' << v;
  std::cout << '\n';
  std::cout << "induced forest: " << dec.forest.NumVertices() << " vertices, "
            << dec.forest.NumEdges() << " edges; " << dec.cross_edges.size()
            << " cross edges, " << dec.fvs_edges.size() << " in-set edges" << std::endl;
  if (static_cast<double>(fvs.size()) >= std::sqrt(g.NumVertices())) {
    std::cerr << "warning: |S| >= sqrt(n); the alg1 mechanism's error bound "
                 "dominates for this graph"
              << std::endl;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differentially private all-pairs shortest path distance release"};
  app.require_subcommand(1);

  std::string config_path, preset, output_dir_flag;
  CLI::App* run = app.add_subcommand("run", "execute an experiment grid");
  run->add_option("config", config_path, "experiment config file");
  run->add_option("--preset", preset, "named preset: ci or figure1");
  run->add_option("--output-dir", output_dir_flag,
                  "override output directory (or set DPSP_OUTPUT_DIR)");

  std::string graph_path, mechanism = "alg1", out_path;
  double epsilon = 1.0, delta = 0.01, gamma = 0.01;
  uint64_t seed = 1;
  CLI::App* release = app.add_subcommand("release", "publish one private release");
  release->add_option("graph", graph_path, "input graph file")->required();
  release->add_option("--mechanism", mechanism, "alg1 (synthetic graph) or alg2 (matrix)");
  release->add_option("--epsilon", epsilon, "privacy budget epsilon");
  release->add_option("--delta", delta, "privacy budget delta");
  release->add_option("--gamma", gamma, "utility failure probability");
  release->add_option("--seed", seed, "random seed");
  release->add_option("--out", out_path, "output file")->required();

  std::string fvs_graph_path;
  CLI::App* fvs = app.add_subcommand("fvs", "print feedback-vertex-set diagnostics");
  fvs->add_option("graph", fvs_graph_path, "input graph file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return RunCommand(config_path, preset, output_dir_flag);
    if (release->parsed()) {
      return ReleaseCommand(graph_path, mechanism, epsilon, delta, gamma, seed, out_path);
    }
    if (fvs->parsed()) return FvsCommand(fvs_graph_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}

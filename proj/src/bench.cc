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

#include "dpsp/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dpsp/fvs_release.h"
#include "dpsp/generators.h"
#include "dpsp/graph_io.h"
#include "dpsp/shortcut_release.h"
#include "dpsp/shortest_paths.h"

namespace dpsp {

namespace {

constexpr uint64_t kGraphStreamTag = 0x67726170;  // stream domain separators
constexpr uint64_t kMechanismStreamTag = 0x6d656368;

const std::vector<std::string> kKnownFamilies = {"multi_stage", "random_tree",
                                                 "connected_random"};
const std::vector<std::string> kKnownMechanisms = {"alg1", "alg2", "edge_baseline",
                                                   "output_baseline"};

int MechanismId(const std::string& name) {
  for (size_t i = 0; i < kKnownMechanisms.size(); ++i) {
    if (kKnownMechanisms[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string Trim(const std::string& s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> items;
  std::istringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = Trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double ParseDoubleStrict(const std::string& text, const std::string& context) {
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(context + ": not a number: \"" + text + "\"");
  }
  if (consumed != text.size()) {
    throw std::invalid_argument(context + ": trailing junk in \"" + text + "\"");
  }
  return value;
}

long ParseLongStrict(const std::string& text, const std::string& context) {
  size_t consumed = 0;
  long value = 0;
  try {
    value = std::stol(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(context + ": not an integer: \"" + text + "\"");
  }
  if (consumed != text.size()) {
    throw std::invalid_argument(context + ": trailing junk in \"" + text + "\"");
  }
  return value;
}

Graph GenerateInstance(const ExperimentConfig& cfg, int target_size, uint64_t seed) {
  if (cfg.family == "multi_stage") {
    const int stages = std::max(1, static_cast<int>(std::lround((target_size - 1) / 10.0)));
    return GenMultiStage(stages, cfg.weight_low, cfg.weight_high, seed);
  }
  if (cfg.family == "random_tree") {
    return GenRandomTree(target_size, cfg.weight_low, cfg.weight_high, seed);
  }
  if (cfg.family == "connected_random") {
    return GenConnectedRandom(target_size, cfg.extra_edges, cfg.weight_low,
                              cfg.weight_high, seed);
  }
  throw std::invalid_argument("unknown family: " + cfg.family);
}

struct MechanismRun {
  DistanceMatrix released;
  int clamped_count = 0;
};

MechanismRun RunMechanism(const std::string& mechanism, const Graph& g, double epsilon,
                          const ExperimentConfig& cfg, RandomStream& rng) {
  const PrivacyBudget budget{epsilon, cfg.delta, cfg.gamma};
  if (mechanism == "alg1") {
    const SyntheticGraph sg = ReleaseSyntheticGraph(g, budget, rng);
    return {AnswerAllPairs(sg), sg.clamped_count};
  }
  if (mechanism == "alg2") {
    FvsReleaseDiagnostics diag;
    DistanceMatrix released = FvsPrivateApsp(g, budget, rng, &diag);
    return {std::move(released), diag.clamped_count};
  }
  if (mechanism == "edge_baseline") {
    int clamped = 0;
    DistanceMatrix released = BaselineEdgeLaplace(g, epsilon, rng, &clamped);
    return {std::move(released), clamped};
  }
  if (mechanism == "output_baseline") {
    int clamped = 0;
    DistanceMatrix released = BaselineOutputPerturbation(g, budget, rng, &clamped);
    return {std::move(released), clamped};
  }
  throw std::invalid_argument("unknown mechanism: " + mechanism);
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (std::find(kKnownFamilies.begin(), kKnownFamilies.end(), family) ==
      kKnownFamilies.end()) {
    throw std::invalid_argument("config: unknown family \"" + family + "\"");
  }
  if (!(weight_low >= 0.0 && weight_low < weight_high)) {
    throw std::invalid_argument("config: need 0 <= weight_low < weight_high");
  }
  if (sizes.empty()) {
    throw std::invalid_argument("config: sizes must be non-empty");
  }
  for (int size : sizes) {
    if (size < 2) throw std::invalid_argument("config: sizes must be >= 2");
  }
  if (mechanisms.empty()) {
    throw std::invalid_argument("config: mechanisms must be non-empty");
  }
  for (const std::string& mechanism : mechanisms) {
    if (MechanismId(mechanism) < 0) {
      throw std::invalid_argument("config: unknown mechanism \"" + mechanism + "\"");
    }
  }
  if (epsilons.empty()) {
    throw std::invalid_argument("config: epsilons must be non-empty");
  }
  for (double epsilon : epsilons) {
    PrivacyBudget{epsilon, delta, gamma}.Validate();
  }
  if (repetitions < 1) {
    throw std::invalid_argument("config: repetitions must be >= 1");
  }
  if (extra_edges < 0) {
    throw std::invalid_argument("config: extra_edges must be >= 0");
  }
}

ExperimentConfig ParseConfig(std::istream& in) {
  ExperimentConfig cfg;
  bool saw_family = false, saw_weights_low = false, saw_weights_high = false;
  bool saw_sizes = false, saw_mechanisms = false, saw_epsilons = false;
  bool saw_delta = false, saw_gamma = false, saw_repetitions = false, saw_seed = false;

  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const size_t comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = Trim(line);
    if (line.empty()) continue;
    const size_t equals = line.find('=');
    if (equals == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": expected key = value");
    }
    const std::string key = Trim(line.substr(0, equals));
    const std::string value = Trim(line.substr(equals + 1));
    if (key == "family") {
      cfg.family = value;
      saw_family = true;
    } else if (key == "weight_low") {
      cfg.weight_low = ParseDoubleStrict(value, key);
      saw_weights_low = true;
    } else if (key == "weight_high") {
      cfg.weight_high = ParseDoubleStrict(value, key);
      saw_weights_high = true;
    } else if (key == "sizes") {
      for (const std::string& item : SplitList(value)) {
        cfg.sizes.push_back(static_cast<int>(ParseLongStrict(item, key)));
      }
      saw_sizes = true;
    } else if (key == "mechanisms") {
      cfg.mechanisms = SplitList(value);
      saw_mechanisms = true;
    } else if (key == "epsilons") {
      for (const std::string& item : SplitList(value)) {
        cfg.epsilons.push_back(ParseDoubleStrict(item, key));
      }
      saw_epsilons = true;
    } else if (key == "delta") {
      cfg.delta = ParseDoubleStrict(value, key);
      saw_delta = true;
    } else if (key == "gamma") {
      cfg.gamma = ParseDoubleStrict(value, key);
      saw_gamma = true;
    } else if (key == "repetitions") {
      cfg.repetitions = static_cast<int>(ParseLongStrict(value, key));
      saw_repetitions = true;
    } else if (key == "master_seed") {
      cfg.master_seed = static_cast<uint64_t>(ParseLongStrict(value, key));
      saw_seed = true;
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else if (key == "extra_edges") {
      cfg.extra_edges = static_cast<int>(ParseLongStrict(value, key));
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": unknown key \"" + key + "\"");
    }
  }
  if (!saw_family || !saw_weights_low || !saw_weights_high || !saw_sizes ||
      !saw_mechanisms || !saw_epsilons || !saw_delta || !saw_gamma ||
      !saw_repetitions || !saw_seed) {
    throw std::invalid_argument(
        "config: required keys are family, weight_low, weight_high, sizes, "
        "mechanisms, epsilons, delta, gamma, repetitions, master_seed");
  }
  cfg.Validate();
  return cfg;
}

ExperimentConfig ParseConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  try {
    return ParseConfig(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

ExperimentConfig ParseConfigString(const std::string& text) {
  std::istringstream in(text);
  return ParseConfig(in);
}

ExperimentConfig CiPreset() {
  ExperimentConfig cfg;
  cfg.family = "multi_stage";
  cfg.weight_low = 2000.0;
  cfg.weight_high = 3000.0;
  cfg.sizes = {101, 201, 301, 401, 501};
  cfg.mechanisms = {"alg1", "edge_baseline"};
  cfg.epsilons = {1.0, 2.0};
  cfg.delta = 0.01;
  cfg.gamma = 0.01;
  cfg.repetitions = 50;
  cfg.master_seed = 20260101;
  return cfg;
}

ExperimentConfig Figure1Preset(int panel) {
  if (panel != 0 && panel != 1) {
    throw std::invalid_argument("Figure1Preset: panel must be 0 or 1");
  }
  ExperimentConfig cfg;
  cfg.family = "multi_stage";
  cfg.weight_low = panel == 0 ? 2000.0 : 1e4;
  cfg.weight_high = panel == 0 ? 3000.0 : 1e5;
  cfg.sizes = {101, 201, 301, 401, 501, 601, 701, 801, 901, 1001};
  cfg.mechanisms = {"alg1"};
  cfg.epsilons = {1.0, 2.0};
  cfg.delta = 0.01;
  cfg.gamma = 0.01;
  cfg.repetitions = 200;
  cfg.master_seed = 20260101;
  return cfg;
}

std::vector<ErrorRecord> RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  const RandomStream master(cfg.master_seed);
  std::vector<ErrorRecord> records;
  records.reserve(cfg.sizes.size() * cfg.mechanisms.size() * cfg.epsilons.size() *
                  cfg.repetitions);

  for (size_t size_index = 0; size_index < cfg.sizes.size(); ++size_index) {
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
      const RandomStream graph_stream = master.Substream(
          {kGraphStreamTag, size_index, static_cast<uint64_t>(rep)});
      const Graph g =
          GenerateInstance(cfg, cfg.sizes[size_index], graph_stream.seed());
      // Exact distances are computed once per instance and shared by every
      // mechanism at this grid point, so error metrics are comparable.
      const DistanceMatrix exact = ApspExact(g);

      for (const std::string& mechanism : cfg.mechanisms) {
        for (size_t eps_index = 0; eps_index < cfg.epsilons.size(); ++eps_index) {
          RandomStream mech_stream = master.Substream(
              {kMechanismStreamTag, size_index, static_cast<uint64_t>(rep),
               static_cast<uint64_t>(MechanismId(mechanism)), eps_index});
          const auto start = std::chrono::steady_clock::now();
          const MechanismRun run =
              RunMechanism(mechanism, g, cfg.epsilons[eps_index], cfg, mech_stream);
          const auto stop = std::chrono::steady_clock::now();
          ErrorRecord record;
          record.mechanism = mechanism;
          record.n = g.NumVertices();
          record.epsilon = cfg.epsilons[eps_index];
          record.rep = rep;
          record.max_abs_error = run.released.MaxAbsErrorVs(exact);
          record.mean_abs_error = run.released.MeanAbsErrorVs(exact);
          record.runtime_ms =
              std::chrono::duration<double, std::milli>(stop - start).count();
          record.clamped_count = run.clamped_count;
          records.push_back(std::move(record));
        }
      }
    }
  }
  std::sort(records.begin(), records.end(),
            [](const ErrorRecord& a, const ErrorRecord& b) {
              return std::tie(a.mechanism, a.n, a.epsilon, a.rep) <
                     std::tie(b.mechanism, b.n, b.epsilon, b.rep);
            });
  return records;
}

void EmitCsv(const std::vector<ErrorRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "mechanism,n,epsilon,rep,max_abs_error,mean_abs_error,runtime_ms,"
         "clamped_count\n";
  for (const ErrorRecord& r : records) {
    out << r.mechanism << ',' << r.n << ',' << FormatDouble(r.epsilon) << ',' << r.rep
        << ',' << FormatDouble(r.max_abs_error) << ',' << FormatDouble(r.mean_abs_error)
        << ',' << FormatDouble(r.runtime_ms) << ',' << r.clamped_count << '\n';
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<ErrorRecord> ParseCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path + ": missing CSV header");
  }
  std::vector<ErrorRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (fields.size() != 8) {
      throw std::runtime_error(path + ": malformed CSV row \"" + line + "\"");
    }
    ErrorRecord r;
    r.mechanism = fields[0];
    r.n = static_cast<int>(ParseLongStrict(fields[1], "n"));
    r.epsilon = ParseDoubleStrict(fields[2], "epsilon");
    r.rep = static_cast<int>(ParseLongStrict(fields[3], "rep"));
    r.max_abs_error = ParseDoubleStrict(fields[4], "max_abs_error");
    r.mean_abs_error = ParseDoubleStrict(fields[5], "mean_abs_error");
    r.runtime_ms = ParseDoubleStrict(fields[6], "runtime_ms");
    r.clamped_count = static_cast<int>(ParseLongStrict(fields[7], "clamped_count"));
    records.push_back(std::move(r));
  }
  return records;
}

double LinearReference(double n, double n0, double err0) { return err0 * (n / n0); }

double SqrtLogSquaredReference(double n, double n0, double err0) {
  const double shape = std::sqrt(n) * std::log(n) * std::log(n);
  const double shape0 = std::sqrt(n0) * std::log(n0) * std::log(n0);
  return err0 * shape / shape0;
}

std::vector<PlotSeries> AggregateSeries(const std::vector<ErrorRecord>& records) {
  std::vector<PlotSeries> series;
  for (const ErrorRecord& r : records) {
    PlotSeries* cell = nullptr;
    for (PlotSeries& s : series) {
      if (s.mechanism == r.mechanism && s.epsilon == r.epsilon) {
        cell = &s;
        break;
      }
    }
    if (cell == nullptr) {
      series.push_back({r.mechanism, r.epsilon, {}});
      cell = &series.back();
    }
    bool found = false;
    for (auto& [n, value] : cell->points) {
      if (n == r.n) {
        found = true;
        break;
      }
    }
    if (!found) cell->points.emplace_back(r.n, 0.0);
  }
  // Mean of max_abs_error over repetitions, per (mechanism, epsilon, n).
  for (PlotSeries& s : series) {
    std::sort(s.points.begin(), s.points.end());
    for (auto& [n, value] : s.points) {
      double total = 0.0;
      int count = 0;
      for (const ErrorRecord& r : records) {
        if (r.mechanism == s.mechanism && r.epsilon == s.epsilon && r.n == n) {
          total += r.max_abs_error;
          ++count;
        }
      }
      value = total / count;
    }
  }
  std::sort(series.begin(), series.end(), [](const PlotSeries& a, const PlotSeries& b) {
    return std::tie(a.mechanism, a.epsilon) < std::tie(b.mechanism, b.epsilon);
  });
  return series;
}

}  // namespace dpsp

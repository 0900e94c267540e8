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

#include "dpsp/generators.h"

#include <stdexcept>
#include <unordered_set>

#include "dpsp/random.h"

namespace dpsp {

namespace {

void CheckWeightRange(double weight_low, double weight_high) {
  if (!(weight_low >= 0.0 && weight_low < weight_high)) {
    throw std::invalid_argument("generator: need 0 <= weight_low < weight_high");
  }
}

}  // namespace

Graph GenMultiStage(int stages, double weight_low, double weight_high, uint64_t seed) {
  if (stages < 1) {
    throw std::invalid_argument("GenMultiStage: stages must be >= 1");
  }
  CheckWeightRange(weight_low, weight_high);
  RandomStream rng(seed);
  const int n = 10 * stages + 1;
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<size_t>(stages) * 18);
  for (int stage = 0; stage < stages; ++stage) {
    const int start = 10 * stage;
    const int end = 10 * (stage + 1);
    for (int middle = start + 1; middle < end; ++middle) {
      edges.push_back({start, middle, rng.NextUniform(weight_low, weight_high)});
      edges.push_back({middle, end, rng.NextUniform(weight_low, weight_high)});
    }
  }
  return Graph(n, std::move(edges));
}

Graph GenRandomTree(int n, double weight_low, double weight_high, uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("GenRandomTree: n must be >= 1");
  }
  CheckWeightRange(weight_low, weight_high);
  RandomStream rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(n - 1);
  for (int v = 1; v < n; ++v) {
    const int parent = rng.NextInt(v);
    edges.push_back({parent, v, rng.NextUniform(weight_low, weight_high)});
  }
  return Graph(n, std::move(edges), Connectivity::kRequireConnected);
}

Graph GenConnectedRandom(int n, int extra_edges, double weight_low, double weight_high,
                         uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("GenConnectedRandom: n must be >= 2");
  }
  if (extra_edges < 0) {
    throw std::invalid_argument("GenConnectedRandom: extra_edges must be >= 0");
  }
  CheckWeightRange(weight_low, weight_high);
  const long capacity = static_cast<long>(n) * (n - 1) / 2 - (n - 1);
  if (extra_edges > capacity) {
    throw std::invalid_argument("GenConnectedRandom: extra_edges exceeds capacity");
  }
  RandomStream rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(n - 1 + extra_edges);
  std::unordered_set<uint64_t> used;
  for (int v = 1; v < n; ++v) {
    const int parent = rng.NextInt(v);
    edges.push_back({parent, v, rng.NextUniform(weight_low, weight_high)});
    used.insert(EdgeKey(parent, v));
  }
  int added = 0;
  while (added < extra_edges) {
    const int u = rng.NextInt(n);
    const int v = rng.NextInt(n);
    if (u == v || used.count(EdgeKey(u, v))) continue;
    edges.push_back({u, v, rng.NextUniform(weight_low, weight_high)});
    used.insert(EdgeKey(u, v));
    ++added;
  }
  return Graph(n, std::move(edges));
}

}  // namespace dpsp

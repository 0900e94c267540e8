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

#include "dpsp/shortcut_release.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "dpsp/shortest_paths.h"

namespace dpsp {

std::vector<int> SampleShortcutVertices(const Graph& g, RandomStream& rng) {
  const int n = g.NumVertices();
  if (n < 4) {
    throw std::invalid_argument("SampleShortcutVertices: need n >= 4");
  }
  const int count = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  // Partial Fisher-Yates: the first `count` slots end up a uniform sample
  // without replacement.
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    const int j = i + rng.NextInt(n - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> sample(pool.begin(), pool.begin() + count);
  std::sort(sample.begin(), sample.end());
  return sample;
}

SyntheticGraph ReleaseSyntheticGraph(const Graph& g, const PrivacyBudget& budget,
                                     RandomStream& rng) {
  budget.Validate();
  const int n = g.NumVertices();
  const NoiseParams params = ShortcutNoiseParams(n, budget);

  std::vector<int> shortcut_vertices = SampleShortcutVertices(g, rng);
  std::unordered_set<uint64_t> shortcut_keys;

  int clamped = 0;
  const auto noisy = [&](double value, double mu, double sigma) {
    const double out = value + SampleLaplace(mu, sigma, rng);
    if (out < 0.0) {
      ++clamped;
      return 0.0;
    }
    return out;
  };

  // Shortcut clique: exact pairwise distances plus shifted noise. One
  // single-source search per shortcut vertex covers all pairs.
  const int k = static_cast<int>(shortcut_vertices.size());
  std::vector<std::vector<double>> from_shortcut(k);
  for (int i = 0; i < k; ++i) {
    from_shortcut[i] = SingleSourceShortestPaths(g, shortcut_vertices[i]).distance;
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(g.NumEdges() + static_cast<size_t>(k) * (k - 1) / 2);
  std::vector<std::pair<int, int>> shortcut_edges;
  shortcut_edges.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int u = shortcut_vertices[i];
      const int v = shortcut_vertices[j];
      const double exact = from_shortcut[i][v];
      edges.push_back({u, v, noisy(exact, params.mu1, params.sigma1)});
      shortcut_edges.emplace_back(u, v);
      shortcut_keys.insert(EdgeKey(u, v));
    }
  }

  // Remaining edges: original weight plus shifted noise. Edges whose both
  // endpoints are shortcut vertices were replaced by the clique above.
  for (const WeightedEdge& e : g.Edges()) {
    if (shortcut_keys.count(EdgeKey(e.u, e.v))) continue;
    edges.push_back({e.u, e.v, noisy(e.weight, params.mu0, params.sigma0)});
  }

  return SyntheticGraph{Graph(n, std::move(edges)), std::move(shortcut_vertices),
                        std::move(shortcut_edges), clamped};
}

DistanceMatrix AnswerAllPairs(const SyntheticGraph& sg) { return ApspExact(sg.base); }

DistanceMatrix BaselineEdgeLaplace(const Graph& g, double epsilon, RandomStream& rng) {
  return BaselineEdgeLaplace(g, epsilon, rng, nullptr);
}

DistanceMatrix BaselineEdgeLaplace(const Graph& g, double epsilon, RandomStream& rng,
                                   int* clamped_count) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("BaselineEdgeLaplace: epsilon must be positive");
  }
  const double scale = 1.0 / epsilon;
  int clamped = 0;
  std::vector<WeightedEdge> edges = g.Edges();
  for (WeightedEdge& e : edges) {
    e.weight += SampleLaplace(0.0, scale, rng);
    if (e.weight < 0.0) {
      e.weight = 0.0;
      ++clamped;
    }
  }
  if (clamped_count != nullptr) *clamped_count = clamped;
  return ApspExact(Graph(g.NumVertices(), std::move(edges)));
}

DistanceMatrix BaselineOutputPerturbation(const Graph& g, const PrivacyBudget& budget,
                                          RandomStream& rng) {
  return BaselineOutputPerturbation(g, budget, rng, nullptr);
}

DistanceMatrix BaselineOutputPerturbation(const Graph& g, const PrivacyBudget& budget,
                                          RandomStream& rng, int* clamped_count) {
  budget.Validate();
  const int n = g.NumVertices();
  const double k = static_cast<double>(n) * (n - 1) / 2.0;
  const double scale = std::sqrt(8.0 * k * std::log(1.0 / budget.delta)) / budget.epsilon;

  DistanceMatrix released = ApspExact(g);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      released.Set(u, v, released.At(u, v) + SampleLaplace(0.0, scale, rng));
    }
  }
  const int clamped = released.ClampNegativesToZero();
  if (clamped_count != nullptr) *clamped_count = clamped;
  return released;
}

}  // namespace dpsp

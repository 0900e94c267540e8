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

// Test-only oracles, independent of the library's shortest-path code.

#ifndef DPSP_TESTS_ORACLES_H_
#define DPSP_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <vector>

#include "dpsp/distance_matrix.h"
#include "dpsp/graph.h"
#include "dpsp/shortest_paths.h"

namespace dpsp::testing {

// Floyd-Warshall over a dense matrix; the independent reference for every
// APSP implementation in the library.
inline DistanceMatrix FloydWarshall(const Graph& g) {
  const int n = g.NumVertices();
  std::vector<std::vector<double>> dist(
      n, std::vector<double>(n, DistanceMatrix::kUnreachable));
  for (int v = 0; v < n; ++v) dist[v][v] = 0.0;
  for (const WeightedEdge& e : g.Edges()) {
    dist[e.u][e.v] = std::min(dist[e.u][e.v], e.weight);
    dist[e.v][e.u] = dist[e.u][e.v];
  }
  for (int p = 0; p < n; ++p) {
    for (int u = 0; u < n; ++u) {
      if (dist[u][p] == DistanceMatrix::kUnreachable) continue;
      for (int v = 0; v < n; ++v) {
        if (dist[p][v] == DistanceMatrix::kUnreachable) continue;
        dist[u][v] = std::min(dist[u][v], dist[u][p] + dist[p][v]);
      }
    }
  }
  DistanceMatrix matrix(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (dist[u][v] != DistanceMatrix::kUnreachable) matrix.Set(u, v, dist[u][v]);
    }
  }
  return matrix;
}

inline bool NearlyEqual(double a, double b, double relative_tolerance) {
  return std::abs(a - b) <=
         relative_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// Largest relative deviation between two matrices over all pairs.
inline double MaxRelativeDeviation(const DistanceMatrix& a, const DistanceMatrix& b) {
  double worst = 0.0;
  for (int u = 0; u < a.NumVertices(); ++u) {
    for (int v = u + 1; v < a.NumVertices(); ++v) {
      const double deviation = std::abs(a.At(u, v) - b.At(u, v)) /
                               std::max({1.0, std::abs(a.At(u, v)), std::abs(b.At(u, v))});
      worst = std::max(worst, deviation);
    }
  }
  return worst;
}

// Path graph 0-1-...-(n-1) with the given edge weights (unit by default).
inline Graph PathGraph(int n, const std::vector<double>& weights = {}) {
  std::vector<WeightedEdge> edges;
  for (int v = 0; v + 1 < n; ++v) {
    edges.push_back({v, v + 1, weights.empty() ? 1.0 : weights[v]});
  }
  return Graph(n, std::move(edges));
}

inline Graph CycleGraph(int n, double weight = 1.0) {
  std::vector<WeightedEdge> edges;
  for (int v = 0; v < n; ++v) {
    edges.push_back({v, (v + 1) % n, weight});
  }
  return Graph(n, std::move(edges));
}

inline Graph CompleteGraph(int n, double weight = 1.0) {
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.push_back({u, v, weight});
    }
  }
  return Graph(n, std::move(edges));
}

// The topology used by the canonical-path analysis: original edges outside
// v1 pairs, plus a shortcut between every v1 pair carrying the exact
// distance in g.
inline Graph AugmentWithShortcuts(const Graph& g, const std::vector<int>& v1) {
  std::vector<WeightedEdge> edges;
  std::vector<char> in_v1(g.NumVertices(), 0);
  for (int v : v1) in_v1[v] = 1;
  for (const WeightedEdge& e : g.Edges()) {
    if (in_v1[e.u] && in_v1[e.v]) continue;
    edges.push_back(e);
  }
  for (size_t i = 0; i < v1.size(); ++i) {
    const SingleSourceResult sssp = SingleSourceShortestPaths(g, v1[i]);
    for (size_t j = i + 1; j < v1.size(); ++j) {
      edges.push_back({v1[i], v1[j], sssp.distance[v1[j]]});
    }
  }
  return Graph(g.NumVertices(), std::move(edges));
}

}  // namespace dpsp::testing

#endif  // DPSP_TESTS_ORACLES_H_

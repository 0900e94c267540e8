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

#include "dpsp/shortest_paths.h"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace dpsp {

SingleSourceResult SingleSourceShortestPaths(const Graph& g, int source) {
  const int n = g.NumVertices();
  if (source < 0 || source >= n) {
    throw std::invalid_argument("SingleSourceShortestPaths: source out of range");
  }
  SingleSourceResult result;
  result.distance.assign(n, DistanceMatrix::kUnreachable);
  result.predecessor.assign(n, -1);

  using HeapEntry = std::pair<double, int>;  // (distance, vertex)
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
  result.distance[source] = 0.0;
  heap.push({0.0, source});
  std::vector<char> settled(n, 0);

  while (!heap.empty()) {
    const auto [dist, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    for (const auto& [w, weight] : g.Neighbors(v)) {
      const double candidate = dist + weight;
      if (candidate < result.distance[w]) {
        result.distance[w] = candidate;
        result.predecessor[w] = v;
        heap.push({candidate, w});
      } else if (candidate == result.distance[w] && !settled[w] &&
                 v < result.predecessor[w]) {
        result.predecessor[w] = v;
      }
    }
  }
  return result;
}

DistanceMatrix ApspExact(const Graph& g) {
  const int n = g.NumVertices();
  DistanceMatrix matrix(n);
  for (int source = 0; source < n; ++source) {
    const SingleSourceResult sssp = SingleSourceShortestPaths(g, source);
    for (int v = source + 1; v < n; ++v) {
      matrix.Set(source, v, sssp.distance[v]);
    }
  }
  return matrix;
}

Path ShortestPathBetween(const Graph& g, int u, int v) {
  const int n = g.NumVertices();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::invalid_argument("ShortestPathBetween: vertex out of range");
  }
  if (u == v) return Path{{u}};
  const SingleSourceResult sssp = SingleSourceShortestPaths(g, u);
  if (sssp.distance[v] == DistanceMatrix::kUnreachable) {
    throw std::invalid_argument("ShortestPathBetween: vertices are not connected");
  }
  Path path;
  for (int cursor = v; cursor != -1; cursor = sssp.predecessor[cursor]) {
    path.vertices.push_back(cursor);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

Path CanonicalPath(const Graph& g, const std::vector<int>& v1, int u, int v) {
  const std::unordered_set<int> members(v1.begin(), v1.end());
  const Path shortest = ShortestPathBetween(g, u, v);

  int first = -1, last = -1;  // positions of the v1 members nearest u and v
  int member_count = 0;
  for (size_t i = 0; i < shortest.vertices.size(); ++i) {
    if (members.count(shortest.vertices[i])) {
      ++member_count;
      if (first < 0) first = static_cast<int>(i);
      last = static_cast<int>(i);
    }
  }
  if (member_count <= 1) return shortest;

  const int p = shortest.vertices[first];
  const int q = shortest.vertices[last];
  if (!g.HasEdge(p, q)) {
    throw std::invalid_argument(
        "CanonicalPath: missing shortcut edge; pass the shortcut-augmented topology");
  }
  Path canonical;
  canonical.vertices.assign(shortest.vertices.begin(), shortest.vertices.begin() + first + 1);
  canonical.vertices.insert(canonical.vertices.end(), shortest.vertices.begin() + last,
                            shortest.vertices.end());
  return canonical;
}

}  // namespace dpsp

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

#ifndef DPSP_SHORTEST_PATHS_H_
#define DPSP_SHORTEST_PATHS_H_

#include <vector>

#include "dpsp/distance_matrix.h"
#include "dpsp/graph.h"

namespace dpsp {

struct SingleSourceResult {
  std::vector<double> distance;
  // Predecessor on a shortest path from the source; -1 for the source and
  // for unreachable vertices. Ties favor the smallest predecessor id, which
  // makes extracted paths deterministic.
  std::vector<int> predecessor;
};

// Label-setting search (binary-heap Dijkstra) from one source. Nonnegative
// weights required, which Graph construction guarantees.
SingleSourceResult SingleSourceShortestPaths(const Graph& g, int source);

// Exact all-pairs distances via one single-source search per vertex.
DistanceMatrix ApspExact(const Graph& g);

// A minimum-weight u-v path; deterministic under the smallest-predecessor
// tie rule. u == v yields the single-vertex path.
Path ShortestPathBetween(const Graph& g, int u, int v);

// Rewrites the shortest u-v path using at most one shortcut between members
// of v1: if the path meets at most one v1 vertex it is returned unchanged;
// otherwise the segment between the v1 members nearest to u and to v is
// replaced by the single edge joining them. The graph must already contain
// that edge (callers pass the shortcut-augmented topology).
Path CanonicalPath(const Graph& g, const std::vector<int>& v1, int u, int v);

}  // namespace dpsp

#endif  // DPSP_SHORTEST_PATHS_H_

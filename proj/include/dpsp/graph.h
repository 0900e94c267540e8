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

#ifndef DPSP_GRAPH_H_
#define DPSP_GRAPH_H_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dpsp {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Packs an unordered vertex pair into a map key. Requires u != v.
uint64_t EdgeKey(int u, int v);

enum class Connectivity {
  kRequireConnected,
  kAllowDisconnected,
};

// Undirected weighted graph, immutable after construction. Vertices are the
// integers 0..n-1. Construction validates: no self-loops, no duplicate edges
// (as unordered pairs), finite nonnegative weights, in-range endpoints, and
// (by default) connectivity. Release mechanisms require connected inputs;
// induced subgraphs such as forests use kAllowDisconnected.
class Graph {
 public:
  Graph(int n, std::vector<WeightedEdge> edges,
        Connectivity connectivity = Connectivity::kRequireConnected);

  int NumVertices() const { return n_; }
  int NumEdges() const { return static_cast<int>(edges_.size()); }

  // Edges in canonical order: u < v within each edge, list sorted by (u, v).
  const std::vector<WeightedEdge>& Edges() const { return edges_; }

  // Neighbors of v as (neighbor, weight) pairs, sorted by neighbor id.
  std::span<const std::pair<int, double>> Neighbors(int v) const;

  int Degree(int v) const;
  bool HasEdge(int u, int v) const;

  // Weight of edge (u, v); throws std::invalid_argument if absent.
  double EdgeWeight(int u, int v) const;

  bool IsConnected() const;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::pair<int, double>> adjacency_;  // CSR payload
  std::vector<int> adjacency_start_;               // CSR offsets, size n+1
  std::unordered_map<uint64_t, double> weight_by_pair_;
};

// A walk v1..vL through a graph: consecutive vertices must be joined by an
// edge and no vertex repeats. A single vertex is a valid (empty) path.
struct Path {
  std::vector<int> vertices;

  int LinkLength() const { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Path&, const Path&) = default;
};

// Validates the Path invariants against g; throws on violation.
void ValidatePath(const Graph& g, const Path& path);

// Total weight of the path's edges in g. Throws if an edge is missing.
double PathWeight(const Graph& g, const Path& path);

// True iff the graph is acyclic. Accepts disconnected inputs; this is the
// one predicate that does not care about connectivity.
bool IsForest(const Graph& g);

}  // namespace dpsp

#endif  // DPSP_GRAPH_H_

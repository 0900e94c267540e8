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

#include "dpsp/graph.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace dpsp {

uint64_t EdgeKey(int u, int v) {
  if (u == v) {
    throw std::invalid_argument("EdgeKey: self-loop");
  }
  const uint64_t lo = static_cast<uint64_t>(std::min(u, v));
  const uint64_t hi = static_cast<uint64_t>(std::max(u, v));
  return (hi << 32) | lo;
}

Graph::Graph(int n, std::vector<WeightedEdge> edges, Connectivity connectivity) : n_(n) {
  if (n <= 0) {
    throw std::invalid_argument("Graph: vertex count must be positive");
  }
  for (WeightedEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("Graph: self-loops are not allowed");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument("Graph: weights must be finite and nonnegative");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(edges[i].u) +
                                  ", " + std::to_string(edges[i].v) + ")");
    }
  }
  edges_ = std::move(edges);

  std::vector<int> degree(n_, 0);
  for (const WeightedEdge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  adjacency_start_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) {
    adjacency_start_[v + 1] = adjacency_start_[v] + degree[v];
  }
  adjacency_.resize(edges_.size() * 2);
  std::vector<int> cursor(adjacency_start_.begin(), adjacency_start_.end() - 1);
  weight_by_pair_.reserve(edges_.size() * 2);
  for (const WeightedEdge& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.weight};
    adjacency_[cursor[e.v]++] = {e.u, e.weight};
    weight_by_pair_.emplace(EdgeKey(e.u, e.v), e.weight);
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + adjacency_start_[v],
              adjacency_.begin() + adjacency_start_[v + 1]);
  }

  if (connectivity == Connectivity::kRequireConnected && !IsConnected()) {
    throw std::invalid_argument("Graph: graph must be connected");
  }
}

std::span<const std::pair<int, double>> Graph::Neighbors(int v) const {
  return {adjacency_.data() + adjacency_start_[v],
          adjacency_.data() + adjacency_start_[v + 1]};
}

int Graph::Degree(int v) const { return adjacency_start_[v + 1] - adjacency_start_[v]; }

bool Graph::HasEdge(int u, int v) const {
  if (u == v) return false;
  return weight_by_pair_.count(EdgeKey(u, v)) > 0;
}

double Graph::EdgeWeight(int u, int v) const {
  auto it = weight_by_pair_.find(EdgeKey(u, v));
  if (it == weight_by_pair_.end()) {
    throw std::invalid_argument("Graph: no edge (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
  }
  return it->second;
}

bool Graph::IsConnected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [w, weight] : Neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

void ValidatePath(const Graph& g, const Path& path) {
  if (path.vertices.empty()) {
    throw std::invalid_argument("Path: must contain at least one vertex");
  }
  std::unordered_set<int> seen;
  for (int v : path.vertices) {
    if (v < 0 || v >= g.NumVertices()) {
      throw std::invalid_argument("Path: vertex out of range");
    }
    if (!seen.insert(v).second) {
      throw std::invalid_argument("Path: repeated vertex");
    }
  }
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    if (!g.HasEdge(path.vertices[i], path.vertices[i + 1])) {
      throw std::invalid_argument("Path: consecutive vertices are not adjacent");
    }
  }
}

double PathWeight(const Graph& g, const Path& path) {
  double total = 0.0;
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    total += g.EdgeWeight(path.vertices[i], path.vertices[i + 1]);
  }
  return total;
}

bool IsForest(const Graph& g) {
  // Acyclic iff every component has exactly size-1 edges; equivalently a DFS
  // never revisits a vertex except through its entering edge.
  const int n = g.NumVertices();
  std::vector<int> parent(n, -2);
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, weight] : g.Neighbors(v)) {
        if (w == parent[v]) continue;
        if (parent[w] != -2) return false;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace dpsp

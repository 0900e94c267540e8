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

#include "dpsp/tree_release.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpsp/noise.h"

namespace dpsp {

namespace {

// Rooted view of the forest: parents, hop depths, weighted depths, and the
// component partition, with every component rooted at its smallest vertex.
struct RootedForest {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<double> weighted_depth;
  std::vector<int> component;
  std::vector<int> roots;
  std::vector<std::vector<int>> children;
};

RootedForest RootForest(const Graph& g) {
  const int n = g.NumVertices();
  RootedForest forest;
  forest.parent.assign(n, -1);
  forest.depth.assign(n, 0);
  forest.weighted_depth.assign(n, 0.0);
  forest.component.assign(n, -1);
  forest.children.assign(n, {});
  for (int root = 0; root < n; ++root) {
    if (forest.component[root] != -1) continue;
    const int comp = static_cast<int>(forest.roots.size());
    forest.roots.push_back(root);
    forest.component[root] = comp;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, weight] : g.Neighbors(v)) {
        if (w == forest.parent[v]) continue;
        forest.parent[w] = v;
        forest.depth[w] = forest.depth[v] + 1;
        forest.weighted_depth[w] = forest.weighted_depth[v] + weight;
        forest.component[w] = comp;
        forest.children[v].push_back(w);
        stack.push_back(w);
      }
    }
  }
  return forest;
}

// Binary-lifting LCA over the rooted forest (public topology only).
class LcaIndex {
 public:
  LcaIndex(const RootedForest& forest, int n) : depth_(forest.depth) {
    int max_depth = 0;
    for (int d : depth_) max_depth = std::max(max_depth, d);
    levels_ = 1;
    while ((1 << levels_) <= std::max(max_depth, 1)) ++levels_;
    up_.assign(levels_, std::vector<int>(n));
    for (int v = 0; v < n; ++v) {
      up_[0][v] = forest.parent[v] == -1 ? v : forest.parent[v];
    }
    for (int k = 1; k < levels_; ++k) {
      for (int v = 0; v < n; ++v) {
        up_[k][v] = up_[k - 1][up_[k - 1][v]];
      }
    }
  }

  int Lca(int u, int v) const {
    if (depth_[u] < depth_[v]) std::swap(u, v);
    int diff = depth_[u] - depth_[v];
    for (int k = 0; diff != 0; ++k, diff >>= 1) {
      if (diff & 1) u = up_[k][u];
    }
    if (u == v) return u;
    for (int k = levels_ - 1; k >= 0; --k) {
      if (up_[k][u] != up_[k][v]) {
        u = up_[k][u];
        v = up_[k][v];
      }
    }
    return up_[0][u];
  }

 private:
  std::vector<int> depth_;
  int levels_;
  std::vector<std::vector<int>> up_;
};

struct PendingComponent {
  std::vector<int> vertices;
  int root;
  int anchor;
  std::vector<int> chain;  // record indices accumulated so far
};

struct RawRecord {
  int anchor;
  int separator;
  double true_sum;
};

}  // namespace

namespace internal {

DistanceMatrix PrivateTreeApspScaled(const Graph& g, double epsilon, double gamma,
                                     RandomStream& rng, double noise_multiplier,
                                     TreeDecomposition* decomposition) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("PrivateTreeApsp: epsilon must be positive");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("PrivateTreeApsp: gamma must lie in (0, 1)");
  }
  if (!IsForest(g)) {
    throw std::invalid_argument("PrivateTreeApsp: input contains a cycle");
  }
  const int n = g.NumVertices();
  const RootedForest forest = RootForest(g);

  // Recursive size-halving decomposition, run with an explicit stack.
  // Scratch arrays are stamped per component to avoid re-initialization.
  std::vector<RawRecord> records;
  std::vector<std::vector<int>> vertex_chain(n);
  std::unordered_map<uint64_t, int> participation;
  std::vector<int> stamp(n, -1);
  std::vector<int> subtree_size(n, 0);
  int stamp_counter = 0;

  std::vector<PendingComponent> stack;
  for (int root : forest.roots) {
    PendingComponent top;
    top.root = root;
    top.anchor = root;
    std::vector<int> queue = {root};
    for (size_t i = 0; i < queue.size(); ++i) {
      top.vertices.push_back(queue[i]);
      for (int c : forest.children[queue[i]]) queue.push_back(c);
    }
    stack.push_back(std::move(top));
  }

  const auto add_record = [&](int anchor, int separator) {
    records.push_back({anchor, separator,
                       forest.weighted_depth[separator] - forest.weighted_depth[anchor]});
    for (int x = separator; x != anchor; x = forest.parent[x]) {
      ++participation[EdgeKey(forest.parent[x], x)];
    }
    return static_cast<int>(records.size()) - 1;
  };

  while (!stack.empty()) {
    PendingComponent comp = std::move(stack.back());
    stack.pop_back();
    const int size = static_cast<int>(comp.vertices.size());

    if (size == 1) {
      const int u = comp.vertices[0];
      vertex_chain[u] = comp.chain;
      if (u != comp.anchor) {
        vertex_chain[u].push_back(add_record(comp.anchor, u));
      }
      continue;
    }

    // Subtree sizes restricted to this component, computed over the reverse
    // of a component-local BFS order.
    const int stamp_id = stamp_counter++;
    for (int v : comp.vertices) stamp[v] = stamp_id;
    std::vector<int> order;
    order.reserve(size);
    order.push_back(comp.root);
    for (size_t i = 0; i < order.size(); ++i) {
      for (int c : forest.children[order[i]]) {
        if (stamp[c] == stamp_id) order.push_back(c);
      }
    }
    for (int v : comp.vertices) subtree_size[v] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (*it != comp.root) subtree_size[forest.parent[*it]] += subtree_size[*it];
    }

    // Walk toward the unique child whose component subtree still holds more
    // than half the vertices; the endpoint is a separator whose removal
    // leaves pieces of at most size / 2.
    int separator = comp.root;
    for (;;) {
      int heavy = -1;
      for (int c : forest.children[separator]) {
        if (stamp[c] == stamp_id && 2 * subtree_size[c] > size) {
          heavy = c;
          break;
        }
      }
      if (heavy == -1) break;
      separator = heavy;
    }

    std::vector<int> chain_below = comp.chain;
    if (separator != comp.anchor) {
      const int record_index = add_record(comp.anchor, separator);
      chain_below.push_back(record_index);
      vertex_chain[separator] = chain_below;
    } else {
      // The separator is the anchor itself (component root): no record.
      vertex_chain[separator] = comp.chain;
    }

    // One child component per subtree hanging off the separator.
    for (int c : forest.children[separator]) {
      if (stamp[c] != stamp_id) continue;
      PendingComponent child;
      child.root = c;
      child.anchor = separator;
      child.chain = chain_below;
      std::vector<int> queue = {c};
      for (size_t i = 0; i < queue.size(); ++i) {
        child.vertices.push_back(queue[i]);
        for (int cc : forest.children[queue[i]]) {
          if (stamp[cc] == stamp_id) queue.push_back(cc);
        }
      }
      stack.push_back(std::move(child));
      // Unstamp so the remainder component below skips this subtree.
      for (int v : stack.back().vertices) stamp[v] = -1;
    }

    // Remainder: everything outside the separator's subtree keeps the old
    // root and anchor (the anchor stays an ancestor of all of it).
    if (separator != comp.root) {
      PendingComponent rest;
      rest.root = comp.root;
      rest.anchor = comp.anchor;
      rest.chain = comp.chain;
      for (int v : comp.vertices) {
        if (stamp[v] == stamp_id && v != separator) rest.vertices.push_back(v);
      }
      if (!rest.vertices.empty()) stack.push_back(std::move(rest));
    }
  }

  int max_participation = 0;
  for (const auto& [key, count] : participation) {
    max_participation = std::max(max_participation, count);
  }
  const double noise_scale =
      records.empty() ? 0.0 : static_cast<double>(max_participation) / epsilon;

  std::vector<double> noisy_sum(records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    noisy_sum[i] = records[i].true_sum +
                   noise_multiplier * SampleLaplace(0.0, noise_scale, rng);
  }

  std::vector<double> root_distance(n, 0.0);
  for (int v = 0; v < n; ++v) {
    double total = 0.0;
    for (int index : vertex_chain[v]) total += noisy_sum[index];
    root_distance[v] = total;
  }

  const LcaIndex lca(forest, n);
  DistanceMatrix released(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (forest.component[u] != forest.component[v]) continue;
      const int meet = lca.Lca(u, v);
      released.Set(u, v,
                   root_distance[u] + root_distance[v] - 2.0 * root_distance[meet]);
    }
  }

  if (decomposition != nullptr) {
    decomposition->component_roots = forest.roots;
    decomposition->records.clear();
    decomposition->records.reserve(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
      decomposition->records.push_back({records[i].anchor, records[i].separator,
                                        noisy_sum[i]});
    }
    decomposition->participation = std::move(participation);
    decomposition->max_participation = max_participation;
    decomposition->noise_scale = noise_scale;
  }
  return released;
}

}  // namespace internal

DistanceMatrix PrivateTreeApsp(const Graph& forest, double epsilon, double gamma,
                               RandomStream& rng, TreeDecomposition* decomposition) {
  return internal::PrivateTreeApspScaled(forest, epsilon, gamma, rng, 1.0, decomposition);
}

}  // namespace dpsp

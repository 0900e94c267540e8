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

#ifndef DPSP_TREE_RELEASE_H_
#define DPSP_TREE_RELEASE_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dpsp/distance_matrix.h"
#include "dpsp/graph.h"
#include "dpsp/random.h"

namespace dpsp {

// One released record: the noisy total weight of the tree path from anchor
// down to separator. The anchor is always an ancestor of the separator in
// the rooted component, so root-to-vertex distances assemble by summing the
// records along a vertex's decomposition chain.
struct TreePathRecord {
  int anchor = 0;
  int separator = 0;
  double noisy_sum = 0.0;
};

// Diagnostic view of a tree-release run. participation maps each edge (by
// EdgeKey) to the number of released records whose path contains it; the
// noise scale of every record is max_participation / epsilon.
struct TreeDecomposition {
  std::vector<int> component_roots;
  std::vector<TreePathRecord> records;
  std::unordered_map<uint64_t, int> participation;
  int max_participation = 0;
  double noise_scale = 0.0;
};

// Pure-epsilon DP all-pairs distances on a tree or forest.
//
// Each component is rooted at its smallest vertex id and recursively split
// at a vertex whose removal leaves pieces of at most half the size; every
// split releases one noisy anchor-to-separator path sum. Any root-to-vertex
// distance is the sum of at most ceil(log2 n) + 1 records, each edge appears
// in at most that many records, and d(u, v) is answered as
// r(u) + r(v) - 2 r(lca(u, v)) from the noisy root distances with the lowest
// common ancestor taken from the public topology.
//
// With probability at least 1 - gamma all answers are within
// O(log^2.5 n log(1/gamma) / epsilon) of the truth. Pairs in different
// components are reported as DistanceMatrix::kUnreachable.
DistanceMatrix PrivateTreeApsp(const Graph& forest, double epsilon, double gamma,
                               RandomStream& rng,
                               TreeDecomposition* decomposition = nullptr);

namespace internal {

// Implementation of PrivateTreeApsp with the record noise multiplied by
// noise_multiplier. Zero gives a noiseless run with identical structure and
// stream consumption; tests use it to check the decomposition in isolation.
DistanceMatrix PrivateTreeApspScaled(const Graph& forest, double epsilon, double gamma,
                                     RandomStream& rng, double noise_multiplier,
                                     TreeDecomposition* decomposition);

}  // namespace internal

}  // namespace dpsp

#endif  // DPSP_TREE_RELEASE_H_

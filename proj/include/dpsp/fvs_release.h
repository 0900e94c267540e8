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

#ifndef DPSP_FVS_RELEASE_H_
#define DPSP_FVS_RELEASE_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dpsp/distance_matrix.h"
#include "dpsp/graph.h"
#include "dpsp/noise.h"
#include "dpsp/random.h"

namespace dpsp {

// Partition of a graph around a feedback vertex set: the induced forest on
// the remaining vertices plus the edges incident to the set. Every input
// edge lands in exactly one of forest / cross_edges / fvs_edges.
struct FvsDecomposition {
  std::vector<int> fvs;                  // sorted
  Graph forest;                          // induced on V \ fvs, local ids
  std::vector<int> forest_to_global;     // local id -> original id
  std::vector<int> global_to_forest;     // original id -> local id, -1 inside fvs
  std::vector<WeightedEdge> cross_edges; // one endpoint in fvs (original ids)
  std::vector<WeightedEdge> fvs_edges;   // both endpoints in fvs (original ids)
};

// Feedback vertex set via the local-ratio 2-approximation for unit vertex
// weights: repeatedly strip degree <= 1 vertices, lower weights along a
// semidisjoint cycle when one exists (otherwise proportionally to degree-1),
// collect zero-weight vertices, and finish with a reverse-delete pass that
// drops redundant picks. Returns a sorted valid FVS; empty for forests.
std::vector<int> ComputeFvs2Approx(const Graph& g);

// Exhaustive minimum feedback vertex set, for test oracles. Subsets are
// scanned in size-then-lexicographic order so ties are deterministic.
// Guarded to n <= 20.
std::vector<int> BruteForceMinFvs(const Graph& g);

// Splits g around the given feedback vertex set. Throws if removing the set
// does not leave a forest.
FvsDecomposition DecomposeByFvs(const Graph& g, std::vector<int> fvs);

struct FvsReleaseDiagnostics {
  std::vector<int> fvs;
  int clamped_count = 0;
  // Set when |fvs| >= sqrt(n); the shortcut mechanism's error bound is then
  // at least as good and callers may prefer it.
  bool large_fvs = false;
};

// (epsilon, delta)-DP all-pairs release for graphs with a small feedback
// vertex set S. Splits the budget three ways: the tree mechanism on the
// induced forest, centered Laplace on exact S-pair distances, and centered
// Laplace on S-incident edge weights; then combines estimates with three
// running-minimum passes over paths through S. Negative final entries clamp
// to zero.
DistanceMatrix FvsPrivateApsp(const Graph& g, const PrivacyBudget& budget,
                              RandomStream& rng,
                              FvsReleaseDiagnostics* diagnostics = nullptr);

namespace internal {

// The three combination passes, exposed for tests of their monotonicity.
// Each takes the matrix produced by the previous phase and the decomposition
// context, and never increases any entry.

// d(u, s) for u outside the set: best forest estimate to a neighbor of s
// plus the noisy edge into s. noisy_cross maps EdgeKey to the noisy weight.
void CombineDirectEntry(const FvsDecomposition& dec,
                        const std::unordered_map<uint64_t, double>& noisy_cross,
                        DistanceMatrix& d);

// d(u, s) refined through intermediate set vertices.
void CombineThroughSet(const FvsDecomposition& dec, DistanceMatrix& d);

// d(u, v) for u, v outside the set, refined through set vertices.
void CombineOutsidePairs(const FvsDecomposition& dec, DistanceMatrix& d);

}  // namespace internal

}  // namespace dpsp

#endif  // DPSP_FVS_RELEASE_H_

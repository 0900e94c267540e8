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

#ifndef DPSP_SHORTCUT_RELEASE_H_
#define DPSP_SHORTCUT_RELEASE_H_

#include <utility>
#include <vector>

#include "dpsp/distance_matrix.h"
#include "dpsp/graph.h"
#include "dpsp/noise.h"
#include "dpsp/random.h"

namespace dpsp {

// The published synthetic graph: the input topology minus edges between
// shortcut vertices, plus a clique of shortcut edges carrying noisy exact
// distances. Weights carry shifted Laplace noise so that, with high
// probability, every released distance is at least the true distance.
struct SyntheticGraph {
  Graph base;                                      // E0 u E1 with noisy weights
  std::vector<int> shortcut_vertices;              // sorted
  std::vector<std::pair<int, int>> shortcut_edges; // all pairs within shortcut_vertices
  int clamped_count = 0;                           // weights clamped to zero
};

// Uniform sample of ceil(sqrt(n)) distinct vertices, sorted ascending.
std::vector<int> SampleShortcutVertices(const Graph& g, RandomStream& rng);

// Builds the private synthetic graph: samples shortcut vertices, wires them
// into a clique weighted with exact distance + Laplace(mu1, sigma1), keeps
// every other input edge with weight + Laplace(mu0, sigma0), and clamps
// negative results to zero. Noise parameters come from ShortcutNoiseParams.
SyntheticGraph ReleaseSyntheticGraph(const Graph& g, const PrivacyBudget& budget,
                                     RandomStream& rng);

// The released all-pairs output: exact APSP over the noisy weights.
DistanceMatrix AnswerAllPairs(const SyntheticGraph& sg);

// Baseline: centered Laplace(1/epsilon) on every edge weight (clamped at
// zero), then exact APSP on the noisy graph.
DistanceMatrix BaselineEdgeLaplace(const Graph& g, double epsilon, RandomStream& rng);
DistanceMatrix BaselineEdgeLaplace(const Graph& g, double epsilon, RandomStream& rng,
                                   int* clamped_count);

// Baseline: exact APSP, then centered Laplace noise on each of the
// n(n-1)/2 released distances with scale sqrt(8 K ln(1/delta)) / epsilon,
// K = n(n-1)/2 (advanced composition over sensitivity-1 queries).
// Negatives clamp to zero; the diagonal stays exactly zero.
DistanceMatrix BaselineOutputPerturbation(const Graph& g, const PrivacyBudget& budget,
                                          RandomStream& rng);
DistanceMatrix BaselineOutputPerturbation(const Graph& g, const PrivacyBudget& budget,
                                          RandomStream& rng, int* clamped_count);

}  // namespace dpsp

#endif  // DPSP_SHORTCUT_RELEASE_H_

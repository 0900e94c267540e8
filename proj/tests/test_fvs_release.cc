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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dpsp/fvs_release.h"
#include "dpsp/generators.h"
#include "dpsp/tree_release.h"
#include "oracles.h"

using dpsp::BruteForceMinFvs;
using dpsp::ComputeFvs2Approx;
using dpsp::Connectivity;
using dpsp::DecomposeByFvs;
using dpsp::DistanceMatrix;
using dpsp::FvsDecomposition;
using dpsp::FvsPrivateApsp;
using dpsp::FvsReleaseDiagnostics;
using dpsp::Graph;
using dpsp::PrivacyBudget;
using dpsp::RandomStream;
using dpsp::WeightedEdge;
using namespace dpsp::testing;

namespace {

bool IsValidFvs(const Graph& g, const std::vector<int>& fvs) {
  std::vector<char> removed(g.NumVertices(), 0);
  for (int v : fvs) removed[v] = 1;
  std::vector<WeightedEdge> kept;
  for (const WeightedEdge& e : g.Edges()) {
    if (!removed[e.u] && !removed[e.v]) kept.push_back(e);
  }
  const Graph remaining(g.NumVertices(), kept, Connectivity::kAllowDisconnected);
  return dpsp::IsForest(remaining);
}

Graph TwoTriangles() {
  return Graph(6, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                   {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}},
               Connectivity::kAllowDisconnected);
}

}  // namespace

TEST_CASE("2-approx on a tree is empty") {
  CHECK(ComputeFvs2Approx(dpsp::GenRandomTree(30, 1.0, 2.0, 4)).empty());
}

TEST_CASE("2-approx on a triangle returns one vertex") {
  const std::vector<int> fvs = ComputeFvs2Approx(CycleGraph(3));
  CHECK(fvs.size() == 1);
  CHECK(fvs == ComputeFvs2Approx(CycleGraph(3)));  // deterministic tie-break
}

TEST_CASE("2-approx on K4 returns two vertices") {
  const Graph k4 = CompleteGraph(4);
  const std::vector<int> fvs = ComputeFvs2Approx(k4);
  CHECK(fvs.size() == 2);
  CHECK(IsValidFvs(k4, fvs));
}

TEST_CASE("2-approx is always a valid feedback vertex set") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 30;
    const int capacity = n * (n - 1) / 2 - (n - 1);
    const Graph g =
        dpsp::GenConnectedRandom(n, std::min(2 + trial, capacity), 1.0, 2.0, trial);
    CHECK(IsValidFvs(g, ComputeFvs2Approx(g)));
  }
}

TEST_CASE("brute force: tree, triangle, two disjoint triangles") {
  CHECK(BruteForceMinFvs(dpsp::GenRandomTree(12, 1.0, 2.0, 5)).empty());
  CHECK(BruteForceMinFvs(CycleGraph(3)).size() == 1);
  CHECK(BruteForceMinFvs(TwoTriangles()).size() == 2);
  CHECK_THROWS_AS(BruteForceMinFvs(dpsp::GenRandomTree(21, 1.0, 2.0, 5)),
                  std::invalid_argument);
}

TEST_CASE("2-approx stays within twice the brute-force optimum") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 8;
    const int capacity = n * (n - 1) / 2 - (n - 1);
    const Graph g =
        dpsp::GenConnectedRandom(n, std::min(1 + trial % 6, capacity), 1.0, 2.0,
                                 500 + trial);
    const size_t approx = ComputeFvs2Approx(g).size();
    const size_t optimum = BruteForceMinFvs(g).size();
    CHECK(approx <= 2 * optimum);
  }
}

TEST_CASE("decomposition partitions the edges") {
  const Graph g = dpsp::GenConnectedRandom(25, 10, 1.0, 2.0, 8);
  const FvsDecomposition dec = DecomposeByFvs(g, ComputeFvs2Approx(g));
  CHECK(dpsp::IsForest(dec.forest));
  CHECK(dec.forest.NumEdges() + static_cast<int>(dec.cross_edges.size()) +
            static_cast<int>(dec.fvs_edges.size()) ==
        g.NumEdges());
  for (const WeightedEdge& e : dec.cross_edges) {
    CHECK((dec.global_to_forest[e.u] < 0) != (dec.global_to_forest[e.v] < 0));
  }
  for (const WeightedEdge& e : dec.fvs_edges) {
    CHECK(dec.global_to_forest[e.u] < 0);
    CHECK(dec.global_to_forest[e.v] < 0);
  }
}

TEST_CASE("decomposition rejects a non-FVS") {
  const Graph g = CycleGraph(5);
  CHECK_THROWS_AS(DecomposeByFvs(g, {}), std::invalid_argument);
}

TEST_CASE("tree input reduces to the tree mechanism") {
  const Graph tree = dpsp::GenRandomTree(40, 1.0, 5.0, 9);
  const PrivacyBudget budget{1.5, 0.01, 0.01};
  RandomStream rng_fvs(21);
  FvsReleaseDiagnostics diag;
  const DistanceMatrix released = FvsPrivateApsp(tree, budget, rng_fvs, &diag);
  CHECK(diag.fvs.empty());

  RandomStream rng_tree(21);
  DistanceMatrix expected =
      dpsp::PrivateTreeApsp(tree, budget.epsilon / 3.0, budget.gamma, rng_tree);
  expected.ClampNegativesToZero();
  CHECK(released.MaxAbsErrorVs(expected) == 0.0);
}

TEST_CASE("vanishing noise recovers exact distances on a 5-cycle") {
  const Graph c5 = CycleGraph(5);
  RandomStream rng(31);
  const DistanceMatrix released = FvsPrivateApsp(c5, {1e6, 0.01, 0.01}, rng);
  CHECK(released.MaxAbsErrorVs(FloydWarshall(c5)) <= 1e-2);
}

TEST_CASE("vanishing noise recovers exact distances on chorded trees") {
  // All six combination cases must route correctly for this to hold.
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = dpsp::GenConnectedRandom(60, 3 + trial, 1.0, 10.0, 600 + trial);
    RandomStream rng(32 + trial);
    const DistanceMatrix released = FvsPrivateApsp(g, {1e7, 0.01, 0.01}, rng);
    CHECK(released.MaxAbsErrorVs(FloydWarshall(g)) <= 1e-2);
  }
}

TEST_CASE("released matrix: zero diagonal, symmetry, determinism") {
  const Graph g = dpsp::GenConnectedRandom(30, 5, 1.0, 10.0, 12);
  const PrivacyBudget budget{2.0, 0.01, 0.01};
  RandomStream rng_a(41), rng_b(41);
  const DistanceMatrix a = FvsPrivateApsp(g, budget, rng_a);
  const DistanceMatrix b = FvsPrivateApsp(g, budget, rng_b);
  CHECK(a.MaxAbsErrorVs(b) == 0.0);
  for (int u = 0; u < 30; ++u) {
    CHECK(a.At(u, u) == 0.0);
    for (int v = u + 1; v < 30; ++v) {
      CHECK(a.At(u, v) == a.At(v, u));
      CHECK(a.At(u, v) >= 0.0);
    }
  }
}

TEST_CASE("combination passes never increase an entry") {
  const Graph g = dpsp::GenConnectedRandom(20, 6, 1.0, 10.0, 13);
  const FvsDecomposition dec = DecomposeByFvs(g, ComputeFvs2Approx(g));
  REQUIRE(!dec.fvs.empty());

  // A plausible mid-release matrix: forest estimates plus set-pair values.
  DistanceMatrix d(20);
  RandomStream rng(14);
  const DistanceMatrix exact = FloydWarshall(g);
  for (int u = 0; u < 20; ++u) {
    for (int v = u + 1; v < 20; ++v) {
      const bool u_in = dec.global_to_forest[u] < 0;
      const bool v_in = dec.global_to_forest[v] < 0;
      if (u_in && v_in) {
        d.Set(u, v, exact.At(u, v) + rng.NextUniform(-1.0, 1.0));
      } else if (!u_in && !v_in) {
        d.Set(u, v, exact.At(u, v) + rng.NextUniform(0.0, 2.0));
      }
    }
  }
  std::unordered_map<uint64_t, double> noisy_cross;
  for (const WeightedEdge& e : dec.cross_edges) {
    noisy_cross[dpsp::EdgeKey(e.u, e.v)] = e.weight + rng.NextUniform(-0.5, 0.5);
  }

  DistanceMatrix before = d;
  dpsp::internal::CombineDirectEntry(dec, noisy_cross, d);
  for (int u = 0; u < 20; ++u) {
    for (int v = 0; v < 20; ++v) CHECK(d.At(u, v) <= before.At(u, v));
  }
  before = d;
  dpsp::internal::CombineThroughSet(dec, d);
  for (int u = 0; u < 20; ++u) {
    for (int v = 0; v < 20; ++v) CHECK(d.At(u, v) <= before.At(u, v));
  }
  before = d;
  dpsp::internal::CombineOutsidePairs(dec, d);
  for (int u = 0; u < 20; ++u) {
    for (int v = 0; v < 20; ++v) CHECK(d.At(u, v) <= before.At(u, v));
  }
}

TEST_CASE("large feedback vertex sets raise the diagnostic flag") {
  const Graph dense = CompleteGraph(16);
  RandomStream rng(51);
  FvsReleaseDiagnostics diag;
  FvsPrivateApsp(dense, {4.0, 0.01, 0.01}, rng, &diag);
  CHECK(diag.large_fvs);
  CHECK(IsValidFvs(dense, diag.fvs));
}

TEST_CASE("disconnected input is rejected") {
  RandomStream rng(52);
  CHECK_THROWS_AS(FvsPrivateApsp(TwoTriangles(), {1.0, 0.01, 0.01}, rng),
                  std::invalid_argument);
}

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

#include "dpsp/fvs_release.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dpsp/shortest_paths.h"
#include "dpsp/tree_release.h"

namespace dpsp {

namespace {

constexpr double kWeightTolerance = 1e-12;

// Union-find acyclicity check of g restricted to vertices outside `removed`.
bool RemovalLeavesForest(const Graph& g, const std::vector<char>& removed) {
  const int n = g.NumVertices();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  const auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const WeightedEdge& e : g.Edges()) {
    if (removed[e.u] || removed[e.v]) continue;
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

// Mutable adjacency view used by the 2-approximation.
struct WorkGraph {
  std::vector<std::set<int>> adjacency;
  std::vector<char> alive;
  int alive_count = 0;

  explicit WorkGraph(const Graph& g)
      : adjacency(g.NumVertices()), alive(g.NumVertices(), 1),
        alive_count(g.NumVertices()) {
    for (const WeightedEdge& e : g.Edges()) {
      adjacency[e.u].insert(e.v);
      adjacency[e.v].insert(e.u);
    }
  }

  int Degree(int v) const { return static_cast<int>(adjacency[v].size()); }

  void Remove(int v) {
    for (int w : adjacency[v]) adjacency[w].erase(v);
    adjacency[v].clear();
    alive[v] = 0;
    --alive_count;
  }
};

// Iteratively strips degree <= 1 vertices; they are never needed in an FVS.
void Cleanup(WorkGraph& wg) {
  std::vector<int> queue;
  for (int v = 0; v < static_cast<int>(wg.alive.size()); ++v) {
    if (wg.alive[v] && wg.Degree(v) <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (!wg.alive[v] || wg.Degree(v) > 1) continue;
    const std::vector<int> neighbors(wg.adjacency[v].begin(), wg.adjacency[v].end());
    wg.Remove(v);
    for (int w : neighbors) {
      if (wg.alive[w] && wg.Degree(w) <= 1) queue.push_back(w);
    }
  }
}

// Follows the degree-2 chain starting with the step v -> next. Returns the
// first vertex of degree != 2 (or v itself if the walk wraps a full cycle)
// and appends the chain's interior to `chain`.
int WalkChain(const WorkGraph& wg, int v, int next, std::vector<int>& chain) {
  int prev = v;
  int cur = next;
  while (cur != v && wg.Degree(cur) == 2) {
    chain.push_back(cur);
    const auto& nbrs = wg.adjacency[cur];
    const int a = *nbrs.begin();
    const int b = *std::next(nbrs.begin());
    const int forward = (a == prev) ? b : a;
    prev = cur;
    cur = forward;
  }
  return cur;
}

// A semidisjoint cycle has every vertex of degree 2 except at most one.
// Scans degree-2 chains; a chain whose two attachment points coincide (or
// that wraps onto itself) closes such a cycle.
std::vector<int> FindSemidisjointCycle(const WorkGraph& wg) {
  const int n = static_cast<int>(wg.alive.size());
  std::vector<char> scanned(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!wg.alive[v] || wg.Degree(v) != 2 || scanned[v]) continue;
    const auto& nbrs = wg.adjacency[v];
    const int first = *nbrs.begin();
    const int second = *std::next(nbrs.begin());

    std::vector<int> left_chain;
    const int left_end = WalkChain(wg, v, first, left_chain);
    if (left_end == v) {
      // Pure cycle of degree-2 vertices.
      left_chain.push_back(v);
      return left_chain;
    }
    std::vector<int> right_chain;
    const int right_end = WalkChain(wg, v, second, right_chain);

    std::vector<int> cycle = {v};
    cycle.insert(cycle.end(), left_chain.begin(), left_chain.end());
    cycle.insert(cycle.end(), right_chain.begin(), right_chain.end());
    if (left_end == right_end) {
      cycle.push_back(left_end);
      return cycle;
    }
    for (int x : cycle) scanned[x] = 1;
  }
  return {};
}

}  // namespace

std::vector<int> ComputeFvs2Approx(const Graph& g) {
  const int n = g.NumVertices();
  WorkGraph wg(g);
  std::vector<double> weight(n, 1.0);
  std::vector<int> picked;  // in pick order, for reverse delete

  Cleanup(wg);
  while (wg.alive_count > 0) {
    const std::vector<int> cycle = FindSemidisjointCycle(wg);
    if (!cycle.empty()) {
      int argmin = -1;
      for (int v : cycle) {
        if (argmin == -1 || weight[v] < weight[argmin]) argmin = v;
      }
      const double lambda = weight[argmin];
      for (int v : cycle) weight[v] -= lambda;
      weight[argmin] = 0.0;
    } else {
      int argmin = -1;
      double lambda = 0.0;
      for (int v = 0; v < n; ++v) {
        if (!wg.alive[v]) continue;
        const double ratio = weight[v] / (wg.Degree(v) - 1);
        if (argmin == -1 || ratio < lambda) {
          argmin = v;
          lambda = ratio;
        }
      }
      for (int v = 0; v < n; ++v) {
        if (wg.alive[v]) weight[v] -= lambda * (wg.Degree(v) - 1);
      }
      weight[argmin] = 0.0;
    }
    for (int v = 0; v < n; ++v) {
      if (wg.alive[v] && weight[v] <= kWeightTolerance) {
        picked.push_back(v);
        wg.Remove(v);
      }
    }
    Cleanup(wg);
  }

  // Reverse delete: drop picks that later picks made redundant.
  std::vector<char> removed(n, 0);
  for (int v : picked) removed[v] = 1;
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
    removed[*it] = 0;
    if (!RemovalLeavesForest(g, removed)) {
      removed[*it] = 1;
    }
  }
  std::vector<int> fvs;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) fvs.push_back(v);
  }
  return fvs;
}

std::vector<int> BruteForceMinFvs(const Graph& g) {
  const int n = g.NumVertices();
  if (n > 20) {
    throw std::invalid_argument("BruteForceMinFvs: guarded to n <= 20");
  }
  std::vector<char> removed(n, 0);
  if (RemovalLeavesForest(g, removed)) return {};
  for (int size = 1; size <= n; ++size) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    for (;;) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int v : combo) removed[v] = 1;
      if (RemovalLeavesForest(g, removed)) return combo;
      // Advance to the next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && combo[i] == n - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  throw std::logic_error("BruteForceMinFvs: unreachable");
}

FvsDecomposition DecomposeByFvs(const Graph& g, std::vector<int> fvs) {
  const int n = g.NumVertices();
  std::sort(fvs.begin(), fvs.end());
  fvs.erase(std::unique(fvs.begin(), fvs.end()), fvs.end());
  std::vector<char> in_fvs(n, 0);
  for (int v : fvs) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("DecomposeByFvs: vertex out of range");
    }
    in_fvs[v] = 1;
  }
  if (static_cast<int>(fvs.size()) == n) {
    throw std::invalid_argument("DecomposeByFvs: set must leave at least one vertex");
  }

  std::vector<int> forest_to_global;
  std::vector<int> global_to_forest(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!in_fvs[v]) {
      global_to_forest[v] = static_cast<int>(forest_to_global.size());
      forest_to_global.push_back(v);
    }
  }

  std::vector<WeightedEdge> forest_edges;
  std::vector<WeightedEdge> cross_edges;
  std::vector<WeightedEdge> fvs_edges;
  for (const WeightedEdge& e : g.Edges()) {
    const int inside = in_fvs[e.u] + in_fvs[e.v];
    if (inside == 0) {
      forest_edges.push_back(
          {global_to_forest[e.u], global_to_forest[e.v], e.weight});
    } else if (inside == 1) {
      cross_edges.push_back(e);
    } else {
      fvs_edges.push_back(e);
    }
  }

  Graph forest(static_cast<int>(forest_to_global.size()), std::move(forest_edges),
               Connectivity::kAllowDisconnected);
  if (!IsForest(forest)) {
    throw std::invalid_argument("DecomposeByFvs: set is not a feedback vertex set");
  }
  return FvsDecomposition{std::move(fvs),          std::move(forest),
                          std::move(forest_to_global), std::move(global_to_forest),
                          std::move(cross_edges),  std::move(fvs_edges)};
}

namespace internal {

void CombineDirectEntry(const FvsDecomposition& dec,
                        const std::unordered_map<uint64_t, double>& noisy_cross,
                        DistanceMatrix& d) {
  const int n = d.NumVertices();
  for (int s : dec.fvs) {
    // Noisy edges from s into the forest, in neighbor order.
    std::vector<std::pair<int, double>> ports;
    for (const WeightedEdge& e : dec.cross_edges) {
      const int other = (e.u == s) ? e.v : (e.v == s ? e.u : -1);
      if (other >= 0 && dec.global_to_forest[other] >= 0) {
        ports.emplace_back(other, noisy_cross.at(EdgeKey(s, other)));
      }
    }
    for (int u = 0; u < n; ++u) {
      if (dec.global_to_forest[u] < 0 || u == s) continue;
      double best = d.At(u, s);
      for (const auto& [p, noisy_weight] : ports) {
        const double via = d.At(u, p) + noisy_weight;
        best = std::min(best, via);
      }
      d.Set(u, s, best);
    }
  }
}

void CombineThroughSet(const FvsDecomposition& dec, DistanceMatrix& d) {
  const int n = d.NumVertices();
  const int k = static_cast<int>(dec.fvs.size());
  if (k == 0) return;
  // Snapshot of the (outside, set) block; updates must read the previous
  // phase's values, not each other.
  std::vector<double> old_cross(static_cast<size_t>(n) * k);
  for (int u = 0; u < n; ++u) {
    for (int j = 0; j < k; ++j) {
      old_cross[static_cast<size_t>(u) * k + j] = d.At(u, dec.fvs[j]);
    }
  }
  for (int u = 0; u < n; ++u) {
    if (dec.global_to_forest[u] < 0) continue;
    for (int j = 0; j < k; ++j) {
      const int v = dec.fvs[j];
      double best = d.At(u, v);
      for (int i = 0; i < k; ++i) {
        const double via = old_cross[static_cast<size_t>(u) * k + i] +
                           d.At(dec.fvs[i], v);
        best = std::min(best, via);
      }
      d.Set(u, v, best);
    }
  }
}

void CombineOutsidePairs(const FvsDecomposition& dec, DistanceMatrix& d) {
  const int n = d.NumVertices();
  for (int u = 0; u < n; ++u) {
    if (dec.global_to_forest[u] < 0) continue;
    for (int v = u + 1; v < n; ++v) {
      if (dec.global_to_forest[v] < 0) continue;
      double best = d.At(u, v);
      for (int s : dec.fvs) {
        best = std::min(best, d.At(u, s) + d.At(s, v));
      }
      d.Set(u, v, best);
    }
  }
}

}  // namespace internal

DistanceMatrix FvsPrivateApsp(const Graph& g, const PrivacyBudget& budget,
                              RandomStream& rng, FvsReleaseDiagnostics* diagnostics) {
  budget.Validate();
  if (!g.IsConnected()) {
    throw std::invalid_argument("FvsPrivateApsp: graph must be connected");
  }
  const int n = g.NumVertices();
  const double eps_prime = budget.epsilon / 3.0;

  FvsDecomposition dec = DecomposeByFvs(g, ComputeFvs2Approx(g));
  const int k = static_cast<int>(dec.fvs.size());
  const NoiseParams params = FvsNoiseParams(k, budget);

  // Forest release on the induced forest, with its share of the budget.
  const DistanceMatrix forest_released =
      PrivateTreeApsp(dec.forest, eps_prime, budget.gamma, rng);

  DistanceMatrix d(n);
  for (int lu = 0; lu < dec.forest.NumVertices(); ++lu) {
    for (int lv = lu + 1; lv < dec.forest.NumVertices(); ++lv) {
      if (forest_released.IsUnreachable(lu, lv)) continue;
      d.Set(dec.forest_to_global[lu], dec.forest_to_global[lv],
            forest_released.At(lu, lv));
    }
  }

  // Exact set-pair distances plus centered noise, one draw per unordered pair.
  for (int i = 0; i < k; ++i) {
    const SingleSourceResult from_s = SingleSourceShortestPaths(g, dec.fvs[i]);
    for (int j = i + 1; j < k; ++j) {
      d.Set(dec.fvs[i], dec.fvs[j],
            from_s.distance[dec.fvs[j]] + SampleLaplace(0.0, params.sigma1, rng));
    }
  }

  // Noisy weights for edges between the set and the forest. Negatives are
  // kept here; these feed minimum combinations, not a shortest-path search.
  std::unordered_map<uint64_t, double> noisy_cross;
  noisy_cross.reserve(dec.cross_edges.size());
  for (const WeightedEdge& e : dec.cross_edges) {
    noisy_cross.emplace(EdgeKey(e.u, e.v),
                        e.weight + SampleLaplace(0.0, params.sigma0, rng));
  }

  internal::CombineDirectEntry(dec, noisy_cross, d);
  internal::CombineThroughSet(dec, d);
  internal::CombineOutsidePairs(dec, d);

  const int clamped = d.ClampNegativesToZero();
  if (diagnostics != nullptr) {
    diagnostics->fvs = dec.fvs;
    diagnostics->clamped_count = clamped;
    diagnostics->large_fvs =
        static_cast<double>(k) >= std::sqrt(static_cast<double>(n));
  }
  return d;
}

}  // namespace dpsp

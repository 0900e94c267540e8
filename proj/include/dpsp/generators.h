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

#ifndef DPSP_GENERATORS_H_
#define DPSP_GENERATORS_H_

#include <cstdint>

#include "dpsp/graph.h"

namespace dpsp {

// Chain of stages used as a hard benchmark instance: each stage has a start
// vertex, an end vertex, and 9 middle vertices connected to both; the end of
// stage i is the start of stage i+1, so n = 10 * stages + 1 and shortest
// paths between far-apart vertices traverse two edges per stage. Weights are
// i.i.d. Uniform(weight_low, weight_high).
Graph GenMultiStage(int stages, double weight_low, double weight_high, uint64_t seed);

// Uniform random attachment tree: vertex v attaches to a uniform vertex in
// [0, v). n - 1 edges, connected, acyclic.
Graph GenRandomTree(int n, double weight_low, double weight_high, uint64_t seed);

// Random attachment tree plus extra_edges uniformly sampled chords.
// m = n - 1 + extra_edges; rejects when extra_edges exceeds capacity.
Graph GenConnectedRandom(int n, int extra_edges, double weight_low, double weight_high,
                         uint64_t seed);

}  // namespace dpsp

#endif  // DPSP_GENERATORS_H_

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

#ifndef DPSP_GRAPH_IO_H_
#define DPSP_GRAPH_IO_H_

#include <iosfwd>
#include <string>

#include "dpsp/distance_matrix.h"
#include "dpsp/graph.h"
#include "dpsp/shortcut_release.h"

namespace dpsp {

// Edge-list text format: optional '#' comment lines, then a line "n m",
// then m lines "u v w" with 0-based vertex ids and a decimal weight.
// Readers reject self-loops, duplicate edges, negative weights, and (unless
// allow_disconnected) disconnected graphs.
Graph ReadGraph(std::istream& in, bool allow_disconnected = false);
Graph ReadGraphFile(const std::string& path, bool allow_disconnected = false);

void WriteGraph(const Graph& g, std::ostream& out);
void WriteGraphFile(const Graph& g, const std::string& path);

// A synthetic graph is the same edge-list format preceded by a sidecar
// header of '#' lines carrying the shortcut vertex ids and the clamp count,
// so the file also loads as a plain Graph.
void WriteSyntheticGraph(const SyntheticGraph& sg, std::ostream& out);
void WriteSyntheticGraphFile(const SyntheticGraph& sg, const std::string& path);
SyntheticGraph ReadSyntheticGraph(std::istream& in);
SyntheticGraph ReadSyntheticGraphFile(const std::string& path);

// Distance matrix text format: a line "n", then n rows of n space-separated
// values. Unreachable entries serialize as "inf".
void WriteDistanceMatrix(const DistanceMatrix& d, std::ostream& out);
void WriteDistanceMatrixFile(const DistanceMatrix& d, const std::string& path);

// Formats a double with 17 significant digits (lossless decimal round-trip),
// locale-independent.
std::string FormatDouble(double value);

}  // namespace dpsp

#endif  // DPSP_GRAPH_IO_H_

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

#include "dpsp/graph_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dpsp {

namespace {

std::runtime_error IoError(const std::string& path, const std::string& what) {
  return std::runtime_error(path + ": " + what);
}

// Reads the next content line, skipping blank and '#' comment lines.
// Comment lines are collected into `comments` when non-null.
bool NextContentLine(std::istream& in, std::string& line,
                     std::vector<std::string>* comments = nullptr) {
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (comments != nullptr) comments->push_back(line);
      continue;
    }
    return true;
  }
  return false;
}

Graph ParseGraph(std::istream& in, bool allow_disconnected,
                 std::vector<std::string>* comments) {
  std::string line;
  if (!NextContentLine(in, line, comments)) {
    throw std::runtime_error("graph input: missing header line");
  }
  std::istringstream header(line);
  int n = 0;
  long m = 0;
  if (!(header >> n >> m) || n <= 0 || m < 0) {
    throw std::runtime_error("graph input: malformed header (want \"n m\")");
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    if (!NextContentLine(in, line, comments)) {
      throw std::runtime_error("graph input: fewer edge lines than header claims");
    }
    std::istringstream edge_line(line);
    WeightedEdge e;
    if (!(edge_line >> e.u >> e.v >> e.weight)) {
      throw std::runtime_error("graph input: malformed edge line \"" + line + "\"");
    }
    edges.push_back(e);
  }
  // Graph construction enforces the remaining format rules (loops,
  // duplicates, negative weights, connectivity).
  return Graph(n, std::move(edges),
               allow_disconnected ? Connectivity::kAllowDisconnected
                                  : Connectivity::kRequireConnected);
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Graph ReadGraph(std::istream& in, bool allow_disconnected) {
  return ParseGraph(in, allow_disconnected, nullptr);
}

Graph ReadGraphFile(const std::string& path, bool allow_disconnected) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  try {
    return ReadGraph(in, allow_disconnected);
  } catch (const std::exception& e) {
    throw IoError(path, e.what());
  }
}

void WriteGraph(const Graph& g, std::ostream& out) {
  out << g.NumVertices() << ' ' << g.NumEdges() << '\n';
  for (const WeightedEdge& e : g.Edges()) {
    out << e.u << ' ' << e.v << ' ' << FormatDouble(e.weight) << '\n';
  }
}

void WriteGraphFile(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  WriteGraph(g, out);
  if (!out) throw IoError(path, "write failed");
}

void WriteSyntheticGraph(const SyntheticGraph& sg, std::ostream& out) {
  out << "# shortcut_vertices:";
  for (int v : sg.shortcut_vertices) out << ' ' << v;
  out << '\n';
  out << "# clamped_count: " << sg.clamped_count << '\n';
  WriteGraph(sg.base, out);
}

void WriteSyntheticGraphFile(const SyntheticGraph& sg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  WriteSyntheticGraph(sg, out);
  if (!out) throw IoError(path, "write failed");
}

SyntheticGraph ReadSyntheticGraph(std::istream& in) {
  std::vector<std::string> comments;
  Graph base = ParseGraph(in, false, &comments);

  std::vector<int> shortcut_vertices;
  int clamped_count = 0;
  bool saw_vertices = false;
  for (const std::string& comment : comments) {
    std::istringstream parser(comment);
    std::string hash, key;
    parser >> hash >> key;
    if (key == "shortcut_vertices:") {
      int v;
      while (parser >> v) shortcut_vertices.push_back(v);
      saw_vertices = true;
    } else if (key == "clamped_count:") {
      parser >> clamped_count;
    }
  }
  if (!saw_vertices) {
    throw std::runtime_error("synthetic graph input: missing shortcut_vertices header");
  }
  std::vector<std::pair<int, int>> shortcut_edges;
  for (size_t i = 0; i < shortcut_vertices.size(); ++i) {
    for (size_t j = i + 1; j < shortcut_vertices.size(); ++j) {
      shortcut_edges.emplace_back(shortcut_vertices[i], shortcut_vertices[j]);
    }
  }
  return SyntheticGraph{std::move(base), std::move(shortcut_vertices),
                        std::move(shortcut_edges), clamped_count};
}

SyntheticGraph ReadSyntheticGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  try {
    return ReadSyntheticGraph(in);
  } catch (const std::exception& e) {
    throw IoError(path, e.what());
  }
}

void WriteDistanceMatrix(const DistanceMatrix& d, std::ostream& out) {
  const int n = d.NumVertices();
  out << n << '\n';
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v > 0) out << ' ';
      if (d.IsUnreachable(u, v)) {
        out << "inf";
      } else {
        out << FormatDouble(d.At(u, v));
      }
    }
    out << '\n';
  }
}

void WriteDistanceMatrixFile(const DistanceMatrix& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  WriteDistanceMatrix(d, out);
  if (!out) throw IoError(path, "write failed");
}

}  // namespace dpsp

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

#ifndef DPSP_DISTANCE_MATRIX_H_
#define DPSP_DISTANCE_MATRIX_H_

#include <limits>
#include <vector>

namespace dpsp {

// Symmetric n x n matrix of pairwise distances with a zero diagonal.
// Exact matrices are finite everywhere; released matrices over forests may
// carry kUnreachable for cross-component pairs.
class DistanceMatrix {
 public:
  static constexpr double kUnreachable = std::numeric_limits<double>::infinity();

  // All off-diagonal entries start as kUnreachable.
  explicit DistanceMatrix(int n);

  int NumVertices() const { return n_; }

  double At(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }

  // Writes both (u, v) and (v, u). The diagonal is pinned to zero.
  void Set(int u, int v, double value);

  bool IsUnreachable(int u, int v) const { return At(u, v) == kUnreachable; }

  // Largest |this - reference| over unordered pairs u < v, skipping
  // unreachable entries on either side.
  double MaxAbsErrorVs(const DistanceMatrix& reference) const;

  // Mean |this - reference| over unordered pairs u < v.
  double MeanAbsErrorVs(const DistanceMatrix& reference) const;

  // Replaces negative entries with zero; returns how many were clamped.
  int ClampNegativesToZero();

 private:
  int n_;
  std::vector<double> d_;
};

}  // namespace dpsp

#endif  // DPSP_DISTANCE_MATRIX_H_

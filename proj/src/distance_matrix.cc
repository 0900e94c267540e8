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

#include "dpsp/distance_matrix.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dpsp {

DistanceMatrix::DistanceMatrix(int n) : n_(n) {
  if (n <= 0) {
    throw std::invalid_argument("DistanceMatrix: size must be positive");
  }
  d_.assign(static_cast<size_t>(n) * n, kUnreachable);
  for (int v = 0; v < n; ++v) {
    d_[static_cast<size_t>(v) * n + v] = 0.0;
  }
}

void DistanceMatrix::Set(int u, int v, double value) {
  if (u == v) {
    if (value != 0.0) {
      throw std::invalid_argument("DistanceMatrix: diagonal entries are fixed at zero");
    }
    return;
  }
  d_[static_cast<size_t>(u) * n_ + v] = value;
  d_[static_cast<size_t>(v) * n_ + u] = value;
}

double DistanceMatrix::MaxAbsErrorVs(const DistanceMatrix& reference) const {
  if (reference.n_ != n_) {
    throw std::invalid_argument("DistanceMatrix: size mismatch");
  }
  double worst = 0.0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (IsUnreachable(u, v) || reference.IsUnreachable(u, v)) continue;
      worst = std::max(worst, std::abs(At(u, v) - reference.At(u, v)));
    }
  }
  return worst;
}

double DistanceMatrix::MeanAbsErrorVs(const DistanceMatrix& reference) const {
  if (reference.n_ != n_) {
    throw std::invalid_argument("DistanceMatrix: size mismatch");
  }
  double total = 0.0;
  long count = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (IsUnreachable(u, v) || reference.IsUnreachable(u, v)) continue;
      total += std::abs(At(u, v) - reference.At(u, v));
      ++count;
    }
  }
  return count == 0 ? 0.0 : total / static_cast<double>(count);
}

int DistanceMatrix::ClampNegativesToZero() {
  int clamped = 0;
  for (double& value : d_) {
    if (value < 0.0) {
      value = 0.0;
      ++clamped;
    }
  }
  // Entries are mirrored, so each negative pair was counted twice.
  return clamped / 2;
}

}  // namespace dpsp

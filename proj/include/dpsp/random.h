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

#ifndef DPSP_RANDOM_H_
#define DPSP_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace dpsp {

// Deterministic random stream. All randomness in the library flows through
// this class so results are reproducible bit-for-bit from a master seed.
// Substreams are derived from the *construction* seed plus a tag path, never
// from engine state, so deriving a substream is a pure function and does not
// disturb the parent stream.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed);

  // Raw 64-bit output of the underlying engine (mt19937_64, whose output
  // sequence is fully specified by the standard).
  uint64_t NextUint64();

  // Uniform double strictly inside (0, 1); 53 bits of precision.
  double NextUniform();

  // Uniform double in (low, high). Requires low < high.
  double NextUniform(double low, double high);

  // Uniform integer in [0, bound). Requires bound > 0. Uses a single draw;
  // the modulo bias is below 2^-50 for every bound used in this project.
  int NextInt(int bound);

  // Child stream keyed by (seed, tags...). Independent of how much of this
  // stream has been consumed.
  RandomStream Substream(std::initializer_list<uint64_t> tags) const;

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64-style mixing used for seed derivation.
uint64_t MixSeed(uint64_t seed, uint64_t tag);

}  // namespace dpsp

#endif  // DPSP_RANDOM_H_

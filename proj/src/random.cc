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

#include "dpsp/random.h"

#include <stdexcept>

namespace dpsp {

namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

uint64_t MixSeed(uint64_t seed, uint64_t tag) {
  return SplitMix64(seed ^ (tag + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

RandomStream::RandomStream(uint64_t seed) : seed_(seed), engine_(SplitMix64(seed)) {}

uint64_t RandomStream::NextUint64() { return engine_(); }

double RandomStream::NextUniform() {
  // (mantissa + 0.5) * 2^-53 lies strictly inside (0, 1).
  const uint64_t mantissa = NextUint64() >> 11;
  return (static_cast<double>(mantissa) + 0.5) * 0x1.0p-53;
}

double RandomStream::NextUniform(double low, double high) {
  if (!(low < high)) {
    throw std::invalid_argument("RandomStream::NextUniform: low must be < high");
  }
  return low + NextUniform() * (high - low);
}

int RandomStream::NextInt(int bound) {
  if (bound <= 0) {
    throw std::invalid_argument("RandomStream::NextInt: bound must be positive");
  }
  return static_cast<int>(NextUint64() % static_cast<uint64_t>(bound));
}

RandomStream RandomStream::Substream(std::initializer_list<uint64_t> tags) const {
  uint64_t s = seed_;
  for (uint64_t tag : tags) {
    s = MixSeed(s, tag);
  }
  return RandomStream(s);
}

}  // namespace dpsp

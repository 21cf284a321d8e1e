// Copyright 2026 The Data Mystery Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MYSTERY_RNG_H_
#define MYSTERY_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace mystery {

// Seeded generator with platform-independent helpers. The standard
// distributions are implementation-defined, so every draw that influences
// generated content goes through the methods below instead.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  size_t Uniform(size_t n);

  // Uniform real in [0, 1) with 53 bits of precision.
  double Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  bool Chance(double p) { return p > 0.0 && Unit() < p; }

  template <typename T>
  const T& Pick(const std::vector<T>& items) {
    return items[Uniform(items.size())];
  }

  // Derives an independent stream keyed by a label, so stages can draw
  // without perturbing each other.
  Rng Fork(std::string_view label);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; also used to derive per-stage seeds.
uint64_t MixSeed(uint64_t value);

}  // namespace mystery

#endif  // MYSTERY_RNG_H_

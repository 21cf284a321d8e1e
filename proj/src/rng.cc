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

#include "mystery/rng.h"

#include <limits>

namespace mystery {

uint64_t MixSeed(uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

size_t Rng::Uniform(size_t n) {
  const uint64_t bound = static_cast<uint64_t>(n);
  // Rejection sampling keeps the draw unbiased.
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % bound;
  uint64_t draw = Next();
  while (draw >= limit) draw = Next();
  return static_cast<size_t>(draw % bound);
}

Rng Rng::Fork(std::string_view label) {
  uint64_t seed = Next();
  for (char c : label) {
    seed = MixSeed(seed ^ static_cast<unsigned char>(c));
  }
  return Rng(seed);
}

}  // namespace mystery

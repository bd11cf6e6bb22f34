// Copyright 2026 The Collabnet Authors
//
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

#ifndef COLLABNET_UTIL_RANDOM_H_
#define COLLABNET_UTIL_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace collabnet {

// Seeded generator with platform-independent output. std::mt19937_64 has a
// standardized sequence, but the std distributions do not, so every draw goes
// through the helpers below.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  uint64_t UniformIndex(uint64_t bound) {
    // Rejection sampling on the top of the range removes modulo bias.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 bits of randomness.
  double UniformDouble() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (size_t i = values.size(); i > 1; --i) {
      const size_t j = UniformIndex(i);
      std::swap(values[i - 1], values[j]);
    }
  }

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    Shuffle(std::span<T>(values));
  }

  // Draws `count` distinct indices from [0, n) in draw order (partial
  // Fisher-Yates). count must not exceed n.
  std::vector<uint32_t> SampleWithoutReplacement(uint32_t n, uint32_t count);

 private:
  std::mt19937_64 engine_;
};

inline std::vector<uint32_t> Rng::SampleWithoutReplacement(uint32_t n,
                                                           uint32_t count) {
  std::vector<uint32_t> pool(n);
  for (uint32_t i = 0; i < n; ++i) pool[i] = i;
  for (uint32_t i = 0; i < count; ++i) {
    const uint32_t j = i + static_cast<uint32_t>(UniformIndex(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace collabnet

#endif  // COLLABNET_UTIL_RANDOM_H_

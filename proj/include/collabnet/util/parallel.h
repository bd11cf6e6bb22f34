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

#ifndef COLLABNET_UTIL_PARALLEL_H_
#define COLLABNET_UTIL_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace collabnet {

// Calls fn(i) for every i in [begin, end) using up to `threads` workers.
// Each index is visited exactly once; callers that write only to slot i get
// results independent of the thread count.
template <typename Fn>
void ParallelFor(size_t begin, size_t end, int threads, Fn&& fn) {
  const size_t n = end > begin ? end - begin : 0;
  const size_t workers =
      std::min<size_t>(n, static_cast<size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const size_t chunk = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    const size_t lo = begin + w * chunk;
    const size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Sum with a fixed reduction shape: blocks of kBlock elements are summed
// left to right, then block sums are combined pairwise. The result does not
// depend on how many threads computed the inputs.
inline double StableSum(std::span<const double> values) {
  constexpr size_t kBlock = 1024;
  std::vector<double> partial;
  partial.reserve(values.size() / kBlock + 1);
  for (size_t lo = 0; lo < values.size(); lo += kBlock) {
    const size_t hi = std::min(values.size(), lo + kBlock);
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) s += values[i];
    partial.push_back(s);
  }
  if (partial.empty()) return 0.0;
  while (partial.size() > 1) {
    std::vector<double> next((partial.size() + 1) / 2);
    for (size_t i = 0; i < next.size(); ++i) {
      next[i] = partial[2 * i] +
                (2 * i + 1 < partial.size() ? partial[2 * i + 1] : 0.0);
    }
    partial.swap(next);
  }
  return partial[0];
}

}  // namespace collabnet

#endif  // COLLABNET_UTIL_PARALLEL_H_

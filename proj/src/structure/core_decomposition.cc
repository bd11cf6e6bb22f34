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

#include "collabnet/structure/core_decomposition.h"

#include <algorithm>

namespace collabnet {

CoreDecomposition CoreNumbers(const Graph& g) {
  const NodeId n = g.node_count();
  CoreDecomposition out;
  out.core_number.assign(n, 0);
  if (n == 0) return out;

  std::vector<uint32_t> degree(n);
  uint32_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = g.Degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }

  // Nodes sorted by degree (counting sort); bin_start[d] is the first
  // position holding a node of current degree d.
  std::vector<uint32_t> bin_start(max_degree + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bin_start[degree[v] + 1];
  for (uint32_t d = 1; d < bin_start.size(); ++d) {
    bin_start[d] += bin_start[d - 1];
  }
  std::vector<NodeId> order(n);
  std::vector<uint32_t> position(n);
  {
    std::vector<uint32_t> next(bin_start.begin(), bin_start.end() - 1);
    for (NodeId v = 0; v < n; ++v) {
      position[v] = next[degree[v]]++;
      order[position[v]] = v;
    }
  }

  for (uint32_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    out.core_number[v] = degree[v];
    for (NodeId u : g.Neighbors(v)) {
      if (degree[u] <= degree[v]) continue;
      // Move u to the front of its bin, then shrink the bin by one.
      const uint32_t du = degree[u];
      const uint32_t front = bin_start[du];
      const NodeId w = order[front];
      if (w != u) {
        std::swap(order[front], order[position[u]]);
        position[w] = position[u];
        position[u] = front;
      }
      ++bin_start[du];
      --degree[u];
    }
  }
  out.degeneracy =
      *std::max_element(out.core_number.begin(), out.core_number.end());
  return out;
}

std::map<uint32_t, uint64_t> CoreHistogram(const CoreDecomposition& cores) {
  std::map<uint32_t, uint64_t> histogram;
  for (uint32_t k : cores.core_number) ++histogram[k];
  return histogram;
}

}  // namespace collabnet

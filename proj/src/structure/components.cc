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

#include "collabnet/structure/components.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace collabnet {

ComponentLabeling ConnectedComponents(const Graph& g) {
  constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();
  const NodeId n = g.node_count();
  ComponentLabeling out;
  if (n == 0) return out;

  // Label in discovery order first; discovery order is by smallest member.
  std::vector<uint32_t> raw(n, kUnset);
  std::vector<uint64_t> raw_sizes;
  std::vector<NodeId> queue;
  uint64_t isolated = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (g.Degree(s) == 0) ++isolated;
    if (raw[s] != kUnset) continue;
    const uint32_t label = static_cast<uint32_t>(raw_sizes.size());
    raw[s] = label;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (NodeId v : g.Neighbors(queue[head])) {
        if (raw[v] == kUnset) {
          raw[v] = label;
          queue.push_back(v);
        }
      }
    }
    raw_sizes.push_back(queue.size());
  }

  std::vector<uint32_t> order(raw_sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    return raw_sizes[a] > raw_sizes[b];
  });
  std::vector<uint32_t> rank(order.size());
  for (uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  out.component_of.resize(n);
  for (NodeId v = 0; v < n; ++v) out.component_of[v] = rank[raw[v]];
  out.sizes.resize(order.size());
  for (uint32_t i = 0; i < order.size(); ++i)
    out.sizes[i] = raw_sizes[order[i]];
  out.giant_fraction = static_cast<double>(out.sizes[0]) / n;
  out.isolated_fraction = static_cast<double>(isolated) / n;
  return out;
}

std::vector<NodeId> ComponentMembers(const ComponentLabeling& labeling,
                                     uint32_t c) {
  std::vector<NodeId> members;
  for (NodeId v = 0; v < labeling.component_of.size(); ++v) {
    if (labeling.component_of[v] == c) members.push_back(v);
  }
  return members;
}

}  // namespace collabnet

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

#ifndef COLLABNET_GRAPH_GRAPH_H_
#define COLLABNET_GRAPH_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace collabnet {

using NodeId = uint32_t;

// Immutable simple undirected graph in compressed sparse row form. Every
// edge {u, v} is stored in both adjacency lists; lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Self loops are dropped and parallel edges merged.
  static Graph FromEdges(NodeId node_count,
                         std::vector<std::pair<NodeId, NodeId>> edges);

  NodeId node_count() const {
    return offsets_.empty() ? 0 : static_cast<NodeId>(offsets_.size() - 1);
  }
  uint64_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const NodeId> Neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  uint32_t Degree(NodeId v) const {
    return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool HasEdge(NodeId u, NodeId v) const;

  // Each edge once, with first < second, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> Edges() const;

 private:
  std::vector<uint64_t> offsets_;
  std::vector<NodeId> neighbors_;
};

}  // namespace collabnet

#endif  // COLLABNET_GRAPH_GRAPH_H_

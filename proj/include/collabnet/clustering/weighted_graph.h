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

#ifndef COLLABNET_CLUSTERING_WEIGHTED_GRAPH_H_
#define COLLABNET_CLUSTERING_WEIGHTED_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "collabnet/clustering/clustering.h"
#include "collabnet/graph/graph.h"

namespace collabnet {

// Undirected weighted graph with self loops, the level graphs of the
// multilevel clustering. A self loop of weight w stands for w internal
// edges of a contracted cluster: it adds w to the total weight and 2w to
// the node's volume.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  static WeightedGraph FromGraph(const Graph& g);

  uint32_t node_count() const {
    return static_cast<uint32_t>(self_loop_.size());
  }
  std::span<const NodeId> Neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  std::span<const double> Weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  double SelfLoop(NodeId v) const { return self_loop_[v]; }
  double Volume(NodeId v) const { return volume_[v]; }
  // Sum of all edge weights, each edge and loop counted once.
  double total_weight() const { return total_weight_; }

  // Merges each cluster into one node: ids of the result are cluster ids.
  // Intra-cluster edges become self-loop weight; parallel inter-cluster
  // edges are summed.
  WeightedGraph Contract(const Clustering& clustering) const;

 private:
  void Finish();

  std::vector<uint64_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<double> weights_;
  std::vector<double> self_loop_;
  std::vector<double> volume_;
  double total_weight_ = 0.0;
};

}  // namespace collabnet

#endif  // COLLABNET_CLUSTERING_WEIGHTED_GRAPH_H_

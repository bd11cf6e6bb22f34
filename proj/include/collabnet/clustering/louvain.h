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

#ifndef COLLABNET_CLUSTERING_LOUVAIN_H_
#define COLLABNET_CLUSTERING_LOUVAIN_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/clustering/clustering.h"
#include "collabnet/clustering/weighted_graph.h"
#include "collabnet/graph/graph.h"
#include "collabnet/util/random.h"

namespace collabnet {

struct LouvainOptions {
  uint64_t seed = 0;
  // A level stops once a full pass gains less modularity than this.
  double min_pass_gain = 1e-9;
};

// One level of the hierarchy: the graph at this level and the clustering
// found on it. Cluster ids are the node ids of the next level's graph.
struct LouvainLevel {
  WeightedGraph graph;
  Clustering clustering;
};

struct LouvainResult {
  Clustering clustering;  // Flat clustering of the input nodes.
  std::vector<LouvainLevel> hierarchy;
};

// Greedy agglomeration from singletons. Each pass visits nodes in a fresh
// seeded random order and moves a node to the neighboring cluster (or a new
// singleton) with the largest modularity gain, equal gains going to the
// lowest cluster id; a node moves only for a strictly positive gain. When a
// level settles, clusters are contracted and the process recurses until a
// level merges nothing. Fails on an edgeless graph.
absl::StatusOr<LouvainResult> Louvain(const Graph& g,
                                      const LouvainOptions& options = {});

// Projects the coarsest clustering down the hierarchy one level at a time
// and runs node-move passes to a local optimum at every level. Modularity
// never decreases.
absl::StatusOr<Clustering> Refine(const std::vector<LouvainLevel>& hierarchy,
                                  const LouvainOptions& options = {});

// Node-move passes on `labels` (values in [0, node_count)) until a pass
// gains less than min_pass_gain. Returns the total modularity gain.
double MoveNodes(const WeightedGraph& g, std::vector<uint32_t>& labels,
                 Rng& rng, double min_pass_gain);

}  // namespace collabnet

#endif  // COLLABNET_CLUSTERING_LOUVAIN_H_

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

#ifndef COLLABNET_CLUSTERING_MODULARITY_H_
#define COLLABNET_CLUSTERING_MODULARITY_H_

#include "absl/status/statusor.h"
#include "collabnet/clustering/clustering.h"
#include "collabnet/clustering/weighted_graph.h"
#include "collabnet/graph/graph.h"

namespace collabnet {

// Coverage minus expected coverage:
//   sum_C |E(C)|/|E| - sum_C vol(C)^2 / (2|E|)^2.
// Counts are kept in integers, so the only rounding is in the final ratio.
// Fails on an edgeless graph or a clustering of the wrong size.
absl::StatusOr<double> Modularity(const Graph& g, const Clustering& clustering);

// Weighted form with self loops: a loop of weight w counts w toward the
// internal weight of its cluster and 2w toward its volume.
absl::StatusOr<double> Modularity(const WeightedGraph& g,
                                  const Clustering& clustering);

}  // namespace collabnet

#endif  // COLLABNET_CLUSTERING_MODULARITY_H_

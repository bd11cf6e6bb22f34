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

#ifndef COLLABNET_CLUSTERING_CLUSTERING_H_
#define COLLABNET_CLUSTERING_CLUSTERING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"

namespace collabnet {

using ClusterId = uint32_t;

// Disjoint, complete partition of nodes [0, n) with contiguous ids
// [0, cluster_count).
class Clustering {
 public:
  Clustering() = default;

  // Relabels arbitrary ids to contiguous ids in order of first appearance.
  static Clustering FromLabels(std::span<const uint32_t> labels);
  static Clustering Singletons(uint32_t node_count);

  uint32_t node_count() const {
    return static_cast<uint32_t>(cluster_of_.size());
  }
  uint32_t cluster_count() const { return cluster_count_; }
  ClusterId operator[](uint32_t node) const { return cluster_of_[node]; }
  const std::vector<ClusterId>& labels() const { return cluster_of_; }

  std::vector<uint64_t> ClusterSizes() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<ClusterId> cluster_of_;
  uint32_t cluster_count_ = 0;
};

}  // namespace collabnet

#endif  // COLLABNET_CLUSTERING_CLUSTERING_H_

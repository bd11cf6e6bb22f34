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

#ifndef COLLABNET_CLUSTERING_CLUSTER_IO_H_
#define COLLABNET_CLUSTERING_CLUSTER_IO_H_

#include <istream>
#include <ostream>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "collabnet/clustering/clustering.h"
#include "collabnet/clustering/overlap.h"
#include "collabnet/graph/authorship_graph.h"

namespace collabnet {

// Cluster assignment CSV with header `node,cluster,type`. `node` is the
// author name or publication key and `type` is `author` or `publication`.
void WriteClusterAssignment(const BipartiteAuthorshipGraph& g,
                            const Clustering& clustering, std::ostream& out);
void WriteClusterAssignment(const CoauthorshipGraph& g,
                            const Clustering& clustering, std::ostream& out);

// Reads the author rows of an assignment file as one set per cluster,
// ordered by numeric cluster id.
absl::StatusOr<std::vector<NamedSet>> ReadAuthorClusters(std::istream& in);

// Long-format cover CSV with header `set,author`, one row per membership.
void WriteCover(const CoverSet& cover, std::ostream& out);
absl::StatusOr<CoverSet> ReadCover(std::istream& in);

// Wide CSV: header `cluster,<column names>`, one line per row set.
void WriteOverlapMatrix(const OverlapMatrix& matrix, std::ostream& out);

}  // namespace collabnet

#endif  // COLLABNET_CLUSTERING_CLUSTER_IO_H_

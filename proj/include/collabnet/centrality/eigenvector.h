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

#ifndef COLLABNET_CENTRALITY_EIGENVECTOR_H_
#define COLLABNET_CENTRALITY_EIGENVECTOR_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/graph/authorship_graph.h"
#include "collabnet/graph/graph.h"

namespace collabnet {

struct EigenvectorOptions {
  double tolerance = 1e-12;
  uint32_t max_iterations = 100000;
  // Diagonal shift applied during iteration. A bipartite adjacency matrix
  // has eigenvalues +l and -l; iterating A + shift*I separates them.
  double shift = 0.5;
  int threads = 1;
};

// Indexed by the joint node numbering of BipartiteAuthorshipGraph (authors
// first). Nodes outside the largest connected component score 0.
struct CentralityResult {
  std::vector<double> scores;  // Unit Euclidean norm, nonnegative.
  double eigenvalue = 0.0;     // Rayleigh quotient x^T A x.
  uint32_t iterations = 0;
  double residual = 0.0;  // Norm of the last change in the iterate.
  uint32_t author_count = 0;
};

// Power iteration on (A + shift*I) restricted to the largest connected
// component, started from the uniform vector; stops when successive unit
// vectors differ by less than `tolerance` in Euclidean norm. Fails with
// Aborted when max_iterations is reached first.
absl::StatusOr<CentralityResult> EigenvectorCentrality(
    const Graph& g, const EigenvectorOptions& options = {});

absl::StatusOr<CentralityResult> EigenvectorCentrality(
    const BipartiteAuthorshipGraph& g, const EigenvectorOptions& options = {});

struct RankedNode {
  NodeId node = 0;
  std::string name;
  double score = 0.0;
};

// Author nodes by score descending, ties by node id ascending; top_k of 0
// means all.
std::vector<RankedNode> RankAuthors(const BipartiteAuthorshipGraph& g,
                                    const CentralityResult& result,
                                    size_t top_k = 0);
// Same for publications, named by publication key.
std::vector<RankedNode> RankPublications(const BipartiteAuthorshipGraph& g,
                                         const CentralityResult& result,
                                         size_t top_k = 0);

struct MedianComparison {
  double median_in = 0.0;
  double median_out = 0.0;
  size_t members_found = 0;  // Subset names present in the graph.
};

// Median author score inside `subset` against all remaining authors. Even
// counts average the two central values. Names not in the graph are
// ignored. Fails if no subset member is present or no author is left out.
absl::StatusOr<MedianComparison> CompareMedianCentrality(
    const BipartiteAuthorshipGraph& g, const CentralityResult& result,
    std::span<const std::string> subset);

// Median of `values` (copied); NaN for an empty list.
double Median(std::vector<double> values);

}  // namespace collabnet

#endif  // COLLABNET_CENTRALITY_EIGENVECTOR_H_

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

// Slow, direct reference implementations. They share no code with the
// library beyond the input types.

#ifndef COLLABNET_TESTING_ORACLES_H_
#define COLLABNET_TESTING_ORACLES_H_

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "collabnet/graph/authorship_graph.h"
#include "testing/generators.h"

namespace collabnet::testing {

// Sum over all ordered node pairs (i, j) in one cluster of
// A_ij - k_i k_j / 2m, divided by 2m, on a dense adjacency matrix.
double PairSumModularity(NodeId n, const EdgeList& edges,
                         const std::vector<uint32_t>& labels);

// Best modularity over every set partition of the nodes (n <= 10).
double ExhaustiveMaxModularity(NodeId n, const EdgeList& edges);

struct DenseEigen {
  double eigenvalue = 0.0;
  std::vector<double> vector;  // Unit norm, nonnegative orientation.
};
// Largest eigenpair of the symmetric adjacency matrix.
DenseEigen DominantEigenpair(NodeId n, const EdgeList& edges);

// For every k, repeatedly deletes nodes with fewer than k live neighbours;
// a node's core number is the last k it survives.
std::vector<uint32_t> NaiveCoreNumbers(NodeId n, const EdgeList& edges);

// Set algebra by enumeration. `lists[p]` are the authors of p and `a` the
// cohort.
struct NaiveMeasures {
  std::set<uint32_t> p, cp, cp_intra, ca;
  std::optional<double> ap, acp, aca, cpr_intra, cad;
};
NaiveMeasures EvaluateNaive(const std::vector<std::vector<AuthorId>>& lists,
                            const std::set<AuthorId>& a);

// Coauthor pairs by checking every pair of authors against every record.
std::set<std::pair<std::string, std::string>> NaiveCoauthorPairs(
    const std::vector<PublicationRecord>& records);

}  // namespace collabnet::testing

#endif  // COLLABNET_TESTING_ORACLES_H_

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

// Random instance generators for property tests.

#ifndef COLLABNET_TESTING_GENERATORS_H_
#define COLLABNET_TESTING_GENERATORS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "collabnet/graph/authorship_graph.h"
#include "collabnet/graph/graph.h"
#include "collabnet/ingest/records.h"
#include "collabnet/util/random.h"

namespace collabnet::testing {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// G(n, p) edge list, each edge once with first < second.
EdgeList RandomEdges(Rng& rng, NodeId n, double p);

// A random spanning tree plus G(n, p) extras; n >= 1.
EdgeList RandomConnectedEdges(Rng& rng, NodeId n, double p);

// Labels in [0, max_clusters), not necessarily contiguous.
std::vector<uint32_t> RandomLabels(Rng& rng, NodeId n, uint32_t max_clusters);

// Sorted distinct values from [0, universe), each kept with probability p.
std::vector<uint32_t> RandomSubset(Rng& rng, uint32_t universe, double p);

// Publication records over authors "a0".."a<authors-1>" with 1..max_size
// distinct authors each, years in [first_year, first_year + years).
std::vector<PublicationRecord> RandomRecords(Rng& rng, uint32_t records,
                                             uint32_t authors,
                                             uint32_t max_size,
                                             int first_year = 2000,
                                             int years = 1);

// Bipartite graph with the given part sizes whose joint graph is connected:
// every publication has at least one author and authors are chained
// through shared publications. authors >= 1, publications >= authors - 1.
BipartiteAuthorshipGraph RandomConnectedBipartite(Rng& rng, uint32_t authors,
                                                  uint32_t publications,
                                                  double p);

// Bipartite graph straight from author lists, authors named "a<i>".
BipartiteAuthorshipGraph BipartiteFromLists(
    uint32_t authors, const std::vector<std::vector<AuthorId>>& lists);

// Draws from P(k) proportional to k^-exponent on k >= 1 by Devroye's
// rejection method for the Zipf distribution. exponent > 1.
uint64_t SampleZipf(Rng& rng, double exponent);

}  // namespace collabnet::testing

#endif  // COLLABNET_TESTING_GENERATORS_H_

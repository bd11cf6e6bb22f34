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

#ifndef COLLABNET_STRUCTURE_CORE_DECOMPOSITION_H_
#define COLLABNET_STRUCTURE_CORE_DECOMPOSITION_H_

#include <cstdint>
#include <map>
#include <vector>

#include "collabnet/graph/graph.h"

namespace collabnet {

struct CoreDecomposition {
  // Largest k such that the node belongs to the k-core.
  std::vector<uint32_t> core_number;
  uint32_t degeneracy = 0;
};

// Bucket-based peeling in O(n + m): nodes are removed in order of current
// degree and each receives the running maximum of the degrees at removal.
CoreDecomposition CoreNumbers(const Graph& g);

// core number -> node count.
std::map<uint32_t, uint64_t> CoreHistogram(const CoreDecomposition& cores);

}  // namespace collabnet

#endif  // COLLABNET_STRUCTURE_CORE_DECOMPOSITION_H_

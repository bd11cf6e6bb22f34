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

#ifndef COLLABNET_STRUCTURE_COMPONENTS_H_
#define COLLABNET_STRUCTURE_COMPONENTS_H_

#include <cstdint>
#include <vector>

#include "collabnet/graph/graph.h"

namespace collabnet {

// Components are numbered by decreasing size, ties broken by smallest
// member node, so component 0 is the giant component.
struct ComponentLabeling {
  std::vector<uint32_t> component_of;
  std::vector<uint64_t> sizes;  // sizes[c] for component c, descending.
  double giant_fraction = 0.0;
  double isolated_fraction = 0.0;  // Degree-0 nodes / node count.

  uint32_t component_count() const {
    return static_cast<uint32_t>(sizes.size());
  }
};

ComponentLabeling ConnectedComponents(const Graph& g);

// Members of component c, ascending.
std::vector<NodeId> ComponentMembers(const ComponentLabeling& labeling,
                                     uint32_t c);

}  // namespace collabnet

#endif  // COLLABNET_STRUCTURE_COMPONENTS_H_

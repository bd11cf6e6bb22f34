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

#ifndef COLLABNET_STRUCTURE_DISTANCE_H_
#define COLLABNET_STRUCTURE_DISTANCE_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "collabnet/graph/graph.h"

namespace collabnet {

struct DistanceSample {
  double mean_distance = 0.0;
  uint32_t sources = 0;
  uint64_t reached_pairs =
      0;  // Ordered (source, target) pairs, target != source.
};

// Samples min(source_samples, |giant|) distinct sources uniformly from the
// largest component, runs a full BFS from each and averages the distance
// over every reached pair. Deterministic in `seed` regardless of `threads`.
// Fails if the graph has no edges or source_samples is 0.
absl::StatusOr<DistanceSample> SampleAverageDistance(const Graph& g,
                                                     uint32_t source_samples,
                                                     uint64_t seed,
                                                     int threads = 1);

}  // namespace collabnet

#endif  // COLLABNET_STRUCTURE_DISTANCE_H_

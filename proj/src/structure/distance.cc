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

#include "collabnet/structure/distance.h"

#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "collabnet/structure/components.h"
#include "collabnet/util/parallel.h"
#include "collabnet/util/random.h"

namespace collabnet {
namespace {

struct BfsTotals {
  uint64_t distance_sum = 0;
  uint64_t reached = 0;
};

BfsTotals BfsFrom(const Graph& g, NodeId source) {
  constexpr uint32_t kUnseen = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> dist(g.node_count(), kUnseen);
  std::vector<NodeId> queue;
  queue.push_back(source);
  dist[source] = 0;
  BfsTotals totals;
  for (size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.Neighbors(u)) {
      if (dist[v] != kUnseen) continue;
      dist[v] = dist[u] + 1;
      totals.distance_sum += dist[v];
      ++totals.reached;
      queue.push_back(v);
    }
  }
  return totals;
}

}  // namespace

absl::StatusOr<DistanceSample> SampleAverageDistance(const Graph& g,
                                                     uint32_t source_samples,
                                                     uint64_t seed,
                                                     int threads) {
  if (source_samples == 0) {
    return absl::InvalidArgumentError("source_samples must be >= 1");
  }
  if (g.edge_count() == 0) {
    return absl::FailedPreconditionError(
        "average distance is undefined on a graph without edges");
  }
  const ComponentLabeling components = ConnectedComponents(g);
  const std::vector<NodeId> giant = ComponentMembers(components, 0);
  const uint32_t count =
      std::min<uint32_t>(source_samples, static_cast<uint32_t>(giant.size()));
  Rng rng(seed);
  const std::vector<uint32_t> picks =
      rng.SampleWithoutReplacement(static_cast<uint32_t>(giant.size()), count);

  std::vector<BfsTotals> per_source(count);
  ParallelFor(0, count, threads,
              [&](size_t i) { per_source[i] = BfsFrom(g, giant[picks[i]]); });

  DistanceSample out;
  out.sources = count;
  uint64_t sum = 0;
  for (const BfsTotals& t : per_source) {
    sum += t.distance_sum;
    out.reached_pairs += t.reached;
  }
  out.mean_distance =
      static_cast<double>(sum) / static_cast<double>(out.reached_pairs);
  return out;
}

}  // namespace collabnet

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

#include "collabnet/clustering/modularity.h"

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/util/parallel.h"

namespace collabnet {
namespace {

absl::Status CheckSize(uint32_t nodes, const Clustering& clustering) {
  if (clustering.node_count() != nodes) {
    return absl::InvalidArgumentError(
        absl::StrCat("clustering covers ", clustering.node_count(),
                     " nodes but the graph has ", nodes));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<double> Modularity(const Graph& g,
                                  const Clustering& clustering) {
  if (auto s = CheckSize(g.node_count(), clustering); !s.ok()) return s;
  if (g.edge_count() == 0) {
    return absl::InvalidArgumentError("modularity of an edgeless graph");
  }
  const uint32_t k = clustering.cluster_count();
  std::vector<uint64_t> intra(k, 0), volume(k, 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const ClusterId c = clustering[v];
    volume[c] += g.Degree(v);
    for (NodeId u : g.Neighbors(v)) {
      if (v < u && clustering[u] == c) ++intra[c];
    }
  }
  uint64_t intra_total = 0, squares = 0;
  for (uint32_t c = 0; c < k; ++c) {
    intra_total += intra[c];
    squares += volume[c] * volume[c];
  }
  // Q = (4m * intra - sum vol^2) / 4m^2 as one division, so the result is
  // the correctly rounded ratio whenever both parts fit in a double.
  const __int128 m = g.edge_count();
  const __int128 numerator = 4 * m * static_cast<__int128>(intra_total) -
                             static_cast<__int128>(squares);
  return static_cast<double>(numerator) / static_cast<double>(4 * m * m);
}

absl::StatusOr<double> Modularity(const WeightedGraph& g,
                                  const Clustering& clustering) {
  if (auto s = CheckSize(g.node_count(), clustering); !s.ok()) return s;
  const double w = g.total_weight();
  if (!(w > 0.0)) {
    return absl::InvalidArgumentError("modularity of an edgeless graph");
  }
  const uint32_t k = clustering.cluster_count();
  std::vector<double> intra(k, 0.0), volume(k, 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const ClusterId c = clustering[v];
    volume[c] += g.Volume(v);
    intra[c] += g.SelfLoop(v);
    const auto adj = g.Neighbors(v);
    const auto wts = g.Weights(v);
    for (size_t i = 0; i < adj.size(); ++i) {
      if (v < adj[i] && clustering[adj[i]] == c) intra[c] += wts[i];
    }
  }
  std::vector<double> terms(k);
  for (uint32_t c = 0; c < k; ++c) {
    const double share = volume[c] / (2.0 * w);
    terms[c] = intra[c] / w - share * share;
  }
  return StableSum(terms);
}

}  // namespace collabnet

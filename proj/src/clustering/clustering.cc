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

#include "collabnet/clustering/clustering.h"

#include <algorithm>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "collabnet/clustering/weighted_graph.h"

namespace collabnet {

Clustering Clustering::FromLabels(std::span<const uint32_t> labels) {
  Clustering c;
  c.cluster_of_.resize(labels.size());
  absl::flat_hash_map<uint32_t, ClusterId> remap;
  for (size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = remap.try_emplace(labels[v], c.cluster_count_);
    if (inserted) ++c.cluster_count_;
    c.cluster_of_[v] = it->second;
  }
  return c;
}

Clustering Clustering::Singletons(uint32_t node_count) {
  Clustering c;
  c.cluster_of_.resize(node_count);
  for (uint32_t v = 0; v < node_count; ++v) c.cluster_of_[v] = v;
  c.cluster_count_ = node_count;
  return c;
}

std::vector<uint64_t> Clustering::ClusterSizes() const {
  std::vector<uint64_t> sizes(cluster_count_, 0);
  for (ClusterId c : cluster_of_) ++sizes[c];
  return sizes;
}

WeightedGraph WeightedGraph::FromGraph(const Graph& g) {
  WeightedGraph w;
  const NodeId n = g.node_count();
  w.offsets_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v)
    w.offsets_[v + 1] = w.offsets_[v] + g.Degree(v);
  w.neighbors_.reserve(w.offsets_[n]);
  for (NodeId v = 0; v < n; ++v) {
    const auto adj = g.Neighbors(v);
    w.neighbors_.insert(w.neighbors_.end(), adj.begin(), adj.end());
  }
  w.weights_.assign(w.neighbors_.size(), 1.0);
  w.self_loop_.assign(n, 0.0);
  w.Finish();
  return w;
}

void WeightedGraph::Finish() {
  const uint32_t n = node_count();
  volume_.assign(n, 0.0);
  double edge_sum = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    double vol = 2.0 * self_loop_[v];
    for (double w : Weights(v)) vol += w;
    volume_[v] = vol;
    edge_sum += vol;
  }
  // Every non-loop edge appears in two lists; loops were doubled above.
  total_weight_ = edge_sum / 2.0;
}

WeightedGraph WeightedGraph::Contract(const Clustering& clustering) const {
  const uint32_t k = clustering.cluster_count();
  WeightedGraph out;
  out.self_loop_.assign(k, 0.0);
  std::vector<std::tuple<ClusterId, ClusterId, double>> arcs;
  for (NodeId v = 0; v < node_count(); ++v) {
    const ClusterId cv = clustering[v];
    out.self_loop_[cv] += self_loop_[v];
    const auto adj = Neighbors(v);
    const auto wts = Weights(v);
    for (size_t i = 0; i < adj.size(); ++i) {
      const ClusterId cu = clustering[adj[i]];
      if (cu == cv) {
        if (v < adj[i]) out.self_loop_[cv] += wts[i];
      } else {
        arcs.emplace_back(cv, cu, wts[i]);
      }
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b));
  });
  out.offsets_.assign(k + 1, 0);
  for (size_t i = 0; i < arcs.size();) {
    const auto [from, to, w0] = arcs[i];
    double w = 0.0;
    size_t j = i;
    // Sorting is stable in (from, to) only; summation order within a run
    // follows the input order, which is deterministic.
    for (; j < arcs.size() && std::get<0>(arcs[j]) == from &&
           std::get<1>(arcs[j]) == to;
         ++j) {
      w += std::get<2>(arcs[j]);
    }
    out.neighbors_.push_back(to);
    out.weights_.push_back(w);
    ++out.offsets_[from + 1];
    i = j;
  }
  for (uint32_t c = 0; c < k; ++c) out.offsets_[c + 1] += out.offsets_[c];
  out.Finish();
  return out;
}

}  // namespace collabnet

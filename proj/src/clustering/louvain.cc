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

#include "collabnet/clustering/louvain.h"

#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "absl/status/status.h"

namespace collabnet {
namespace {

// Smallest modularity gain that counts as an improvement for a single move.
// Guards against cycling on gains that are rounding noise.
constexpr double kMinMoveGain = 1e-13;

// Refinement draws visit orders from its own stream so that running it does
// not perturb, or depend on, the draws made by the agglomeration.
constexpr uint64_t kRefineSeedSalt = 0x9e3779b97f4a7c15ULL;

}  // namespace

double MoveNodes(const WeightedGraph& g, std::vector<uint32_t>& labels,
                 Rng& rng, double min_pass_gain) {
  const uint32_t n = g.node_count();
  const double w = g.total_weight();
  if (n == 0 || !(w > 0.0)) return 0.0;
  const double two_w = 2.0 * w;

  std::vector<double> total(n, 0.0);
  std::vector<uint32_t> size(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    total[labels[v]] += g.Volume(v);
    ++size[labels[v]];
  }
  std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> empty;
  for (uint32_t c = 0; c < n; ++c) {
    if (size[c] == 0) empty.push(c);
  }

  std::vector<double> link(n, 0.0);
  std::vector<uint32_t> touched;
  std::vector<NodeId> order(n);
  double gained = 0.0;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    double pass_gain = 0.0;
    for (NodeId v : order) {
      const uint32_t from = labels[v];
      const double vol = g.Volume(v);
      const auto adj = g.Neighbors(v);
      const auto wts = g.Weights(v);
      for (size_t i = 0; i < adj.size(); ++i) {
        const uint32_t c = labels[adj[i]];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += wts[i];
      }
      total[from] -= vol;
      const double stay = link[from] - vol * total[from] / two_w;

      uint32_t best = from;
      double best_score = -std::numeric_limits<double>::infinity();
      auto consider = [&](uint32_t c, double score) {
        if (score > best_score || (score == best_score && c < best)) {
          best = c;
          best_score = score;
        }
      };
      for (uint32_t c : touched) {
        if (c != from) consider(c, link[c] - vol * total[c] / two_w);
      }
      // A move to an empty cluster scores 0. If v is alone, that option is
      // the same as staying.
      if (size[from] > 1) consider(empty.top(), 0.0);

      const double gain = (best_score - stay) / w;
      if (best != from && gain > kMinMoveGain) {
        if (size[best] == 0) empty.pop();
        labels[v] = best;
        --size[from];
        ++size[best];
        total[best] += vol;
        if (size[from] == 0) empty.push(from);
        pass_gain += gain;
      } else {
        total[from] += vol;
      }
      for (uint32_t c : touched) link[c] = 0.0;
      touched.clear();
    }
    gained += pass_gain;
    if (pass_gain < min_pass_gain) break;
  }
  return gained;
}

absl::StatusOr<LouvainResult> Louvain(const Graph& g,
                                      const LouvainOptions& options) {
  if (g.edge_count() == 0) {
    return absl::InvalidArgumentError("clustering an edgeless graph");
  }
  Rng rng(options.seed);
  LouvainResult result;
  std::vector<uint32_t> flat(g.node_count());
  std::iota(flat.begin(), flat.end(), 0);
  WeightedGraph level = WeightedGraph::FromGraph(g);
  while (true) {
    std::vector<uint32_t> labels(level.node_count());
    std::iota(labels.begin(), labels.end(), 0);
    MoveNodes(level, labels, rng, options.min_pass_gain);
    Clustering clustering = Clustering::FromLabels(labels);
    for (uint32_t& x : flat) x = clustering[x];
    const bool merged = clustering.cluster_count() < level.node_count();
    WeightedGraph next;
    if (merged) next = level.Contract(clustering);
    result.hierarchy.push_back({std::move(level), std::move(clustering)});
    if (!merged) break;
    level = std::move(next);
  }
  result.clustering = Clustering::FromLabels(flat);
  return result;
}

absl::StatusOr<Clustering> Refine(const std::vector<LouvainLevel>& hierarchy,
                                  const LouvainOptions& options) {
  if (hierarchy.empty()) {
    return absl::InvalidArgumentError("empty hierarchy");
  }
  for (size_t l = 0; l < hierarchy.size(); ++l) {
    const LouvainLevel& level = hierarchy[l];
    if (level.clustering.node_count() != level.graph.node_count() ||
        (l + 1 < hierarchy.size() && level.clustering.cluster_count() !=
                                         hierarchy[l + 1].graph.node_count())) {
      return absl::InvalidArgumentError("inconsistent hierarchy");
    }
  }
  Rng rng(options.seed ^ kRefineSeedSalt);
  std::vector<uint32_t> labels = hierarchy.back().clustering.labels();
  MoveNodes(hierarchy.back().graph, labels, rng, options.min_pass_gain);
  for (size_t l = hierarchy.size() - 1; l-- > 0;) {
    const Clustering& down = hierarchy[l].clustering;
    std::vector<uint32_t> projected(down.node_count());
    for (uint32_t v = 0; v < down.node_count(); ++v) {
      projected[v] = labels[down[v]];
    }
    labels = std::move(projected);
    MoveNodes(hierarchy[l].graph, labels, rng, options.min_pass_gain);
  }
  return Clustering::FromLabels(labels);
}

}  // namespace collabnet

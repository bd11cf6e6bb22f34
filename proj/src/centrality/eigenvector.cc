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

#include "collabnet/centrality/eigenvector.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/structure/components.h"
#include "collabnet/util/parallel.h"

namespace collabnet {
namespace {

double Norm(std::span<const double> v, std::vector<double>& scratch) {
  scratch.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) scratch[i] = v[i] * v[i];
  return std::sqrt(StableSum(scratch));
}

std::vector<RankedNode> Rank(std::vector<RankedNode> nodes, size_t top_k) {
  std::sort(nodes.begin(), nodes.end(),
            [](const RankedNode& a, const RankedNode& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.node < b.node;
            });
  if (top_k > 0 && nodes.size() > top_k) nodes.resize(top_k);
  return nodes;
}

}  // namespace

absl::StatusOr<CentralityResult> EigenvectorCentrality(
    const Graph& g, const EigenvectorOptions& options) {
  if (g.node_count() == 0) {
    return absl::InvalidArgumentError("centrality of an empty graph");
  }
  if (!(options.tolerance > 0.0)) {
    return absl::InvalidArgumentError("tolerance must be > 0");
  }
  if (!(options.shift > 0.0)) {
    return absl::InvalidArgumentError("shift must be > 0");
  }
  const ComponentLabeling components = ConnectedComponents(g);
  const std::vector<NodeId> members = ComponentMembers(components, 0);
  const size_t k = members.size();

  // Iterate over the component in compact indices.
  std::vector<uint32_t> local(g.node_count(), 0);
  for (uint32_t i = 0; i < k; ++i) local[members[i]] = i;

  std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<double> y(k), diff(k), scratch;
  auto multiply_shifted = [&](const std::vector<double>& in,
                              std::vector<double>& out) {
    ParallelFor(0, k, options.threads, [&](size_t i) {
      double s = options.shift * in[i];
      for (NodeId u : g.Neighbors(members[i])) s += in[local[u]];
      out[i] = s;
    });
  };

  CentralityResult result;
  result.residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (uint32_t it = 1; it <= options.max_iterations; ++it) {
    multiply_shifted(x, y);
    const double norm = Norm(y, scratch);
    for (size_t i = 0; i < k; ++i) {
      y[i] /= norm;
      diff[i] = y[i] - x[i];
    }
    result.residual = Norm(diff, scratch);
    x.swap(y);
    result.iterations = it;
    if (result.residual < options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    return absl::AbortedError(absl::StrCat(
        "power iteration did not converge in ", options.max_iterations,
        " iterations (last change ", result.residual, ")"));
  }

  // Rayleigh quotient of the unshifted matrix.
  multiply_shifted(x, y);
  scratch.resize(k);
  for (size_t i = 0; i < k; ++i) {
    scratch[i] = x[i] * (y[i] - options.shift * x[i]);
  }
  result.eigenvalue = StableSum(scratch);

  result.scores.assign(g.node_count(), 0.0);
  for (size_t i = 0; i < k; ++i) result.scores[members[i]] = x[i];
  return result;
}

absl::StatusOr<CentralityResult> EigenvectorCentrality(
    const BipartiteAuthorshipGraph& g, const EigenvectorOptions& options) {
  auto result = EigenvectorCentrality(g.ToGraph(), options);
  if (result.ok()) result->author_count = g.author_count();
  return result;
}

std::vector<RankedNode> RankAuthors(const BipartiteAuthorshipGraph& g,
                                    const CentralityResult& result,
                                    size_t top_k) {
  std::vector<RankedNode> nodes;
  nodes.reserve(g.author_count());
  for (AuthorId a = 0; a < g.author_count(); ++a) {
    const NodeId v = g.AuthorNode(a);
    nodes.push_back({v, g.AuthorName(a), result.scores[v]});
  }
  return Rank(std::move(nodes), top_k);
}

std::vector<RankedNode> RankPublications(const BipartiteAuthorshipGraph& g,
                                         const CentralityResult& result,
                                         size_t top_k) {
  std::vector<RankedNode> nodes;
  nodes.reserve(g.publication_count());
  for (PublicationId p = 0; p < g.publication_count(); ++p) {
    const NodeId v = g.PublicationNode(p);
    nodes.push_back({v, g.Publication(p).key, result.scores[v]});
  }
  return Rank(std::move(nodes), top_k);
}

double Median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  const size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

absl::StatusOr<MedianComparison> CompareMedianCentrality(
    const BipartiteAuthorshipGraph& g, const CentralityResult& result,
    std::span<const std::string> subset) {
  absl::flat_hash_set<AuthorId> inside;
  for (const std::string& name : subset) {
    if (auto id = g.FindAuthor(name)) inside.insert(*id);
  }
  if (inside.empty()) {
    return absl::InvalidArgumentError(
        "no subset member is an author of the graph");
  }
  if (inside.size() == g.author_count()) {
    return absl::InvalidArgumentError(
        "subset contains every author; nothing to compare against");
  }
  std::vector<double> in_scores, out_scores;
  for (AuthorId a = 0; a < g.author_count(); ++a) {
    const double s = result.scores[g.AuthorNode(a)];
    (inside.contains(a) ? in_scores : out_scores).push_back(s);
  }
  MedianComparison out;
  out.members_found = inside.size();
  out.median_in = Median(std::move(in_scores));
  out.median_out = Median(std::move(out_scores));
  return out;
}

}  // namespace collabnet

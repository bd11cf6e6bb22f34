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

#include "testing/generators.h"

#include <cmath>
#include <memory>
#include <set>

#include "absl/strings/str_cat.h"

namespace collabnet::testing {

EdgeList RandomEdges(Rng& rng, NodeId n, double p) {
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.UniformDouble() < p) edges.emplace_back(u, v);
    }
  }
  return edges;
}

EdgeList RandomConnectedEdges(Rng& rng, NodeId n, double p) {
  std::set<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 1; v < n; ++v) {
    const NodeId u = static_cast<NodeId>(rng.UniformIndex(v));
    edges.emplace(u, v);
  }
  for (const auto& e : RandomEdges(rng, n, p)) edges.insert(e);
  return {edges.begin(), edges.end()};
}

std::vector<uint32_t> RandomLabels(Rng& rng, NodeId n, uint32_t max_clusters) {
  std::vector<uint32_t> labels(n);
  for (uint32_t& l : labels) {
    l = static_cast<uint32_t>(rng.UniformIndex(max_clusters));
  }
  return labels;
}

std::vector<uint32_t> RandomSubset(Rng& rng, uint32_t universe, double p) {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < universe; ++i) {
    if (rng.UniformDouble() < p) out.push_back(i);
  }
  return out;
}

std::vector<PublicationRecord> RandomRecords(Rng& rng, uint32_t records,
                                             uint32_t authors,
                                             uint32_t max_size, int first_year,
                                             int years) {
  std::vector<PublicationRecord> out;
  for (uint32_t r = 0; r < records; ++r) {
    PublicationRecord rec;
    rec.pub_key = absl::StrCat("p", r);
    rec.year = first_year + static_cast<int>(rng.UniformIndex(years));
    rec.venue_key = absl::StrCat("v", rng.UniformIndex(3));
    const uint32_t size =
        1 +
        static_cast<uint32_t>(rng.UniformIndex(std::min(max_size, authors)));
    for (uint32_t i : rng.SampleWithoutReplacement(authors, size)) {
      rec.authors.push_back(absl::StrCat("a", i));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

BipartiteAuthorshipGraph BipartiteFromLists(
    uint32_t authors, const std::vector<std::vector<AuthorId>>& lists) {
  std::vector<std::string> names;
  for (uint32_t a = 0; a < authors; ++a) names.push_back(absl::StrCat("a", a));
  std::vector<PublicationInfo> pubs;
  for (size_t p = 0; p < lists.size(); ++p) {
    pubs.push_back({absl::StrCat("p", p), 2000, "v"});
  }
  auto g = BipartiteAuthorshipGraph::Create(
      std::make_shared<NameTable>(std::move(names)), authors, std::move(pubs),
      lists);
  return std::move(g).value();
}

BipartiteAuthorshipGraph RandomConnectedBipartite(Rng& rng, uint32_t authors,
                                                  uint32_t publications,
                                                  double p) {
  std::vector<std::set<AuthorId>> lists(publications);
  // Publication i - 1 links author i to an earlier author.
  for (uint32_t a = 1; a < authors; ++a) {
    lists[a - 1].insert(a);
    lists[a - 1].insert(static_cast<AuthorId>(rng.UniformIndex(a)));
  }
  for (uint32_t q = 0; q < publications; ++q) {
    if (lists[q].empty()) {
      lists[q].insert(static_cast<AuthorId>(rng.UniformIndex(authors)));
    }
    for (AuthorId a = 0; a < authors; ++a) {
      if (rng.UniformDouble() < p) lists[q].insert(a);
    }
  }
  std::vector<std::vector<AuthorId>> out;
  for (const auto& s : lists) out.emplace_back(s.begin(), s.end());
  return BipartiteFromLists(authors, out);
}

uint64_t SampleZipf(Rng& rng, double exponent) {
  const double am1 = exponent - 1.0;
  const double b = std::pow(2.0, am1);
  while (true) {
    const double u = 1.0 - rng.UniformDouble();  // (0, 1]
    const double v = rng.UniformDouble();
    const double x = std::floor(std::pow(u, -1.0 / am1));
    if (x > 9e18) continue;
    const double t = std::pow(1.0 + 1.0 / x, am1);
    if (v * x * (t - 1.0) / (b - 1.0) <= t / b) {
      return static_cast<uint64_t>(x);
    }
  }
}

}  // namespace collabnet::testing

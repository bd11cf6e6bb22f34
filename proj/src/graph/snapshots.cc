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

#include "collabnet/graph/snapshots.h"

#include <algorithm>
#include <numeric>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/ingest/name_normalization.h"

namespace collabnet {

absl::StatusOr<SnapshotSequence> BuildTimeResolved(
    std::span<const PublicationRecord> records, int width, int step) {
  if (width <= 0 || step <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("window width and step must be >= 1 (got w=", width,
                     ", s=", step, ")"));
  }
  if (records.empty()) {
    return absl::InvalidArgumentError("cannot build snapshots from no records");
  }

  std::vector<size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return records[a].year < records[b].year;
  });

  auto names = std::make_shared<NameTable>();
  SnapshotSequence seq;
  seq.width = width;
  seq.step = step;
  // Publications in year order with their author ids.
  std::vector<std::vector<AuthorId>> authors_by_rank(records.size());
  for (size_t rank = 0; rank < order.size(); ++rank) {
    const PublicationRecord& r = records[order[rank]];
    absl::flat_hash_set<AuthorId> seen;
    for (const std::string& raw : r.authors) {
      const std::string name = NormalizeName(raw);
      if (name.empty()) continue;
      const AuthorId id = names->Intern(name);
      if (id == seq.first_year.size()) seq.first_year.push_back(r.year);
      if (seen.insert(id).second) authors_by_rank[rank].push_back(id);
    }
    if (authors_by_rank[rank].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("record '", r.pub_key, "' has no author"));
    }
  }
  seq.names = names;

  const int min_year = records[order.front()].year;
  const int max_year = records[order.back()].year;
  for (int start = min_year; start <= max_year; start += step) {
    const int end = start + width;
    // Authors whose first year is <= end form a prefix.
    const uint32_t author_count = static_cast<uint32_t>(
        std::upper_bound(seq.first_year.begin(), seq.first_year.end(), end) -
        seq.first_year.begin());
    const auto lo = std::lower_bound(
        order.begin(), order.end(), start,
        [&](size_t idx, int y) { return records[idx].year < y; });
    const auto hi = std::upper_bound(
        order.begin(), order.end(), end,
        [&](int y, size_t idx) { return y < records[idx].year; });

    std::vector<PublicationInfo> pubs;
    std::vector<std::vector<AuthorId>> pub_authors;
    for (auto it = lo; it != hi; ++it) {
      const PublicationRecord& r = records[*it];
      pubs.push_back({r.pub_key, r.year, r.venue_key});
      pub_authors.push_back(authors_by_rank[it - order.begin()]);
    }
    auto graph = BipartiteAuthorshipGraph::Create(
        names, author_count, std::move(pubs), std::move(pub_authors));
    if (!graph.ok()) return graph.status();
    seq.snapshots.push_back({start, end, *std::move(graph)});
  }
  return seq;
}

}  // namespace collabnet

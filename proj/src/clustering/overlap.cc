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

#include "collabnet/clustering/overlap.h"

#include <algorithm>
#include <map>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/ingest/name_normalization.h"
#include "collabnet/util/parallel.h"
#include "collabnet/util/random.h"
#include "collabnet/util/strings.h"

namespace collabnet {
namespace {

size_t IntersectionSize(std::span<const uint32_t> a,
                        std::span<const uint32_t> b) {
  size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double Score(OverlapMeasure measure, size_t inter, size_t a, size_t b) {
  if (measure == OverlapMeasure::kJaccard) {
    return static_cast<double>(inter) / static_cast<double>(a + b - inter);
  }
  return static_cast<double>(inter) / static_cast<double>(std::min(a, b));
}

void SortUnique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

absl::StatusOr<double> Jaccard(std::span<const uint32_t> a,
                               std::span<const uint32_t> b) {
  if (a.empty() && b.empty()) {
    return absl::InvalidArgumentError("Jaccard index of two empty sets");
  }
  return Score(OverlapMeasure::kJaccard, IntersectionSize(a, b), a.size(),
               b.size());
}

absl::StatusOr<double> OverlapCoefficient(std::span<const uint32_t> a,
                                          std::span<const uint32_t> b) {
  if (a.empty() || b.empty()) {
    return absl::InvalidArgumentError("overlap coefficient with an empty set");
  }
  return Score(OverlapMeasure::kOverlap, IntersectionSize(a, b), a.size(),
               b.size());
}

absl::StatusOr<OverlapMeasure> ParseOverlapMeasure(std::string_view name) {
  if (name == "jaccard") return OverlapMeasure::kJaccard;
  if (name == "overlap") return OverlapMeasure::kOverlap;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown measure '", Absl(name), "' (jaccard|overlap)"));
}

std::string_view OverlapMeasureName(OverlapMeasure measure) {
  return measure == OverlapMeasure::kJaccard ? "jaccard" : "overlap";
}

CoverSet TopicalClusters(std::span<const PublicationRecord> records,
                         size_t min_authors) {
  std::map<std::string, std::vector<std::string>> by_venue;
  for (const PublicationRecord& r : records) {
    if (r.venue_key.empty()) continue;
    auto& members = by_venue[r.venue_key];
    for (const std::string& a : r.authors) members.push_back(NormalizeName(a));
  }
  CoverSet cover;
  for (auto& [venue, members] : by_venue) {
    SortUnique(members);
    if (members.empty() || members.size() < min_authors) continue;
    cover.sets.push_back({venue, std::move(members)});
  }
  return cover;
}

std::vector<NamedSet> AuthorClusters(const BipartiteAuthorshipGraph& g,
                                     const Clustering& clustering) {
  std::vector<std::vector<std::string>> members(clustering.cluster_count());
  for (AuthorId a = 0; a < g.author_count(); ++a) {
    members[clustering[g.AuthorNode(a)]].push_back(g.AuthorName(a));
  }
  std::vector<NamedSet> out;
  for (ClusterId c = 0; c < members.size(); ++c) {
    if (members[c].empty()) continue;
    SortUnique(members[c]);
    out.push_back({absl::StrCat(c), std::move(members[c])});
  }
  return out;
}

std::vector<NamedSet> LargestSets(std::span<const NamedSet> sets,
                                  size_t top_n) {
  std::vector<size_t> order(sets.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return sets[x].members.size() > sets[y].members.size();
  });
  if (top_n > 0 && order.size() > top_n) order.resize(top_n);
  std::vector<NamedSet> out;
  out.reserve(order.size());
  for (size_t i : order) out.push_back(sets[i]);
  return out;
}

absl::StatusOr<OverlapMatrix> BuildOverlapMatrix(
    std::span<const NamedSet> rows, std::span<const NamedSet> columns,
    OverlapMeasure measure, int threads) {
  if (rows.empty() || columns.empty()) {
    return absl::InvalidArgumentError("overlap matrix needs rows and columns");
  }
  for (const auto* side : {&rows, &columns}) {
    for (const NamedSet& s : *side) {
      if (s.members.empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("set '", s.name, "' is empty"));
      }
    }
  }
  absl::flat_hash_map<std::string_view, uint32_t> author_index;
  std::vector<std::vector<uint32_t>> columns_of;
  for (uint32_t j = 0; j < columns.size(); ++j) {
    for (const std::string& m : columns[j].members) {
      auto [it, inserted] = author_index.try_emplace(m, columns_of.size());
      if (inserted) columns_of.emplace_back();
      auto& list = columns_of[it->second];
      // Members are unique within a set, so j is pushed at most once.
      list.push_back(j);
    }
  }

  OverlapMatrix matrix;
  matrix.measure = measure;
  const size_t width = columns.size();
  matrix.values.assign(rows.size() * width, 0.0);
  for (const NamedSet& r : rows) matrix.row_names.push_back(r.name);
  for (const NamedSet& c : columns) matrix.column_names.push_back(c.name);

  ParallelFor(0, rows.size(), threads, [&](size_t i) {
    std::vector<size_t> inter(width, 0);
    for (const std::string& m : rows[i].members) {
      auto it = author_index.find(m);
      if (it == author_index.end()) continue;
      for (uint32_t j : columns_of[it->second]) ++inter[j];
    }
    const size_t a = rows[i].members.size();
    for (size_t j = 0; j < width; ++j) {
      matrix.values[i * width + j] =
          Score(measure, inter[j], a, columns[j].members.size());
    }
  });
  return matrix;
}

absl::StatusOr<double> MeanMaxOverlap(const OverlapMatrix& matrix) {
  const size_t rows = matrix.row_names.size();
  const size_t width = matrix.column_names.size();
  if (rows == 0 || width == 0) {
    return absl::InvalidArgumentError("empty overlap matrix");
  }
  std::vector<double> maxima(rows);
  for (size_t i = 0; i < rows; ++i) {
    maxima[i] = *std::max_element(matrix.values.begin() + i * width,
                                  matrix.values.begin() + (i + 1) * width);
  }
  return StableSum(maxima) / static_cast<double>(rows);
}

absl::StatusOr<std::vector<NamedSet>> RandomBaseline(
    std::span<const NamedSet> clusters, size_t top_n,
    std::span<const std::string> pool, uint64_t seed) {
  if (top_n > clusters.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "top_n ", top_n, " exceeds the cluster count ", clusters.size()));
  }
  const std::vector<NamedSet> largest = LargestSets(clusters, top_n);
  std::vector<std::string> authors(pool.begin(), pool.end());
  SortUnique(authors);
  size_t needed = 0;
  for (const NamedSet& s : largest) needed += s.members.size();
  if (needed > authors.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("pool of ", authors.size(),
                     " authors is smaller than the ", needed, " required"));
  }
  Rng rng(seed);
  const std::vector<uint32_t> drawn = rng.SampleWithoutReplacement(
      static_cast<uint32_t>(authors.size()), static_cast<uint32_t>(needed));
  std::vector<NamedSet> out;
  out.reserve(largest.size());
  size_t next = 0;
  for (const NamedSet& s : largest) {
    NamedSet r{s.name, {}};
    for (size_t k = 0; k < s.members.size(); ++k) {
      r.members.push_back(authors[drawn[next++]]);
    }
    std::sort(r.members.begin(), r.members.end());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace collabnet

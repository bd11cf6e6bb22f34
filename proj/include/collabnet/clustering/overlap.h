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

#ifndef COLLABNET_CLUSTERING_OVERLAP_H_
#define COLLABNET_CLUSTERING_OVERLAP_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/clustering/clustering.h"
#include "collabnet/graph/authorship_graph.h"
#include "collabnet/ingest/records.h"

namespace collabnet {

// Both take sorted, duplicate-free sequences.
// |A n B| / |A u B|; fails when both are empty.
absl::StatusOr<double> Jaccard(std::span<const uint32_t> a,
                               std::span<const uint32_t> b);
// |A n B| / min(|A|, |B|); fails when either is empty.
absl::StatusOr<double> OverlapCoefficient(std::span<const uint32_t> a,
                                          std::span<const uint32_t> b);

enum class OverlapMeasure { kJaccard, kOverlap };

absl::StatusOr<OverlapMeasure> ParseOverlapMeasure(std::string_view name);
std::string_view OverlapMeasureName(OverlapMeasure measure);

// A named set of author names, members sorted and unique.
struct NamedSet {
  std::string name;
  std::vector<std::string> members;

  friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

// Ground-truth author sets, one per venue, sorted by venue. Sets may
// overlap and need not cover every author; none is empty.
struct CoverSet {
  std::vector<NamedSet> sets;
};

// One set per venue holding every author with a publication there. Venues
// with fewer than `min_authors` authors are dropped, as are records without
// a venue. The result is empty when no venue qualifies.
CoverSet TopicalClusters(std::span<const PublicationRecord> records,
                         size_t min_authors = 10);

// Author members of each cluster of a clustering of the joint node set of
// `g`; publication nodes are dropped, and clusters left empty are omitted.
// Sets are named by cluster id and ordered by it.
std::vector<NamedSet> AuthorClusters(const BipartiteAuthorshipGraph& g,
                                     const Clustering& clustering);

// The `top_n` largest sets, ties kept in input order; top_n of 0 means all.
std::vector<NamedSet> LargestSets(std::span<const NamedSet> sets, size_t top_n);

struct OverlapMatrix {
  OverlapMeasure measure = OverlapMeasure::kJaccard;
  std::vector<std::string> row_names;
  std::vector<std::string> column_names;
  std::vector<double> values;  // Row-major, every entry in [0, 1].

  double At(size_t row, size_t column) const {
    return values[row * column_names.size() + column];
  }
};

// Entry (i, j) compares rows[i] with columns[j]. Intersections come from an
// inverted index over the columns, so the cost follows the number of
// (member, column) incidences rather than rows * columns. Fails if either
// side is empty or holds an empty set.
absl::StatusOr<OverlapMatrix> BuildOverlapMatrix(
    std::span<const NamedSet> rows, std::span<const NamedSet> columns,
    OverlapMeasure measure, int threads = 1);

// Mean over rows of the row maximum.
absl::StatusOr<double> MeanMaxOverlap(const OverlapMatrix& matrix);

// Copies the sizes of the `top_n` largest clusters and fills them with
// disjoint authors drawn uniformly from `pool` (duplicates in the pool are
// ignored). Fails when top_n exceeds the cluster count or the pool is too
// small for the total size.
absl::StatusOr<std::vector<NamedSet>> RandomBaseline(
    std::span<const NamedSet> clusters, size_t top_n,
    std::span<const std::string> pool, uint64_t seed);

}  // namespace collabnet

#endif  // COLLABNET_CLUSTERING_OVERLAP_H_

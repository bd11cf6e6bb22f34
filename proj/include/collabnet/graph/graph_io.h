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

// Tabular intermediate graph files. Every file starts with the line
//
//   collabnet-graph <version> <kind>
//
// where kind is `bipartite`, `coauthorship` or `snapshots`, followed by
// counted sections of tab-separated rows:
//
//   bipartite:     authors N, N name rows; publications M, M rows of
//                  key<TAB>year<TAB>venue; edges E, E rows of
//                  author_id<TAB>publication_id in publication order.
//   coauthorship:  authors N, N name rows; edges E, E rows of u<TAB>v, u < v.
//   snapshots:     width w; step s; authors N, N rows of
//                  name<TAB>first_year; snapshots K, then per snapshot a
//                  line `snapshot start end author_count`, followed by the
//                  publications and edges sections as in `bipartite`.

#ifndef COLLABNET_GRAPH_GRAPH_IO_H_
#define COLLABNET_GRAPH_GRAPH_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "collabnet/graph/authorship_graph.h"
#include "collabnet/graph/snapshots.h"

namespace collabnet {

inline constexpr int kGraphFormatVersion = 1;

enum class GraphFileKind { kBipartite, kCoauthorship, kSnapshots };

absl::Status WriteAuthorshipGraph(const BipartiteAuthorshipGraph& g,
                                  std::ostream& out);
absl::StatusOr<BipartiteAuthorshipGraph> ReadAuthorshipGraph(std::istream& in);

absl::Status WriteCoauthorshipGraph(const CoauthorshipGraph& g,
                                    std::ostream& out);
absl::StatusOr<CoauthorshipGraph> ReadCoauthorshipGraph(std::istream& in);

absl::Status WriteSnapshotSequence(const SnapshotSequence& seq,
                                   std::ostream& out);
absl::StatusOr<SnapshotSequence> ReadSnapshotSequence(std::istream& in);

// Reads only the header line of a graph file.
absl::StatusOr<GraphFileKind> PeekGraphKind(const std::filesystem::path& path);

absl::StatusOr<BipartiteAuthorshipGraph> LoadAuthorshipGraph(
    const std::filesystem::path& path);
absl::StatusOr<SnapshotSequence> LoadSnapshotSequence(
    const std::filesystem::path& path);
// Accepts a coauthorship file, or a bipartite file that is projected.
absl::StatusOr<CoauthorshipGraph> LoadCoauthorshipGraph(
    const std::filesystem::path& path);

}  // namespace collabnet

#endif  // COLLABNET_GRAPH_GRAPH_IO_H_

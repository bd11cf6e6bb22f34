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

#ifndef COLLABNET_GRAPH_SNAPSHOTS_H_
#define COLLABNET_GRAPH_SNAPSHOTS_H_

#include <memory>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/graph/authorship_graph.h"
#include "collabnet/ingest/records.h"

namespace collabnet {

// Graph of one time window [window_start, window_end] (both inclusive).
struct Snapshot {
  int window_start = 0;
  int window_end = 0;
  BipartiteAuthorshipGraph graph;
};

// Time-resolved authorship graph. Author ids are assigned in order of first
// publication year (ties by input order), so the authors present at any
// point form the prefix [0, snapshot.graph.author_count()) of one shared
// name table.
struct SnapshotSequence {
  int width = 1;
  int step = 1;
  std::shared_ptr<const NameTable> names;
  // Year of the first publication of each author, nondecreasing by id.
  std::vector<int> first_year;
  std::vector<Snapshot> snapshots;
};

// Windows start at the earliest publication year and advance by `step`
// until the start passes the latest year. Each snapshot holds the
// publications dated within its window and every author with a publication
// dated on or before the window end (authors without publications in the
// window stay as degree-0 nodes).
absl::StatusOr<SnapshotSequence> BuildTimeResolved(
    std::span<const PublicationRecord> records, int width, int step);

}  // namespace collabnet

#endif  // COLLABNET_GRAPH_SNAPSHOTS_H_

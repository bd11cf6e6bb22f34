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

#include "collabnet/dynamics/tracking.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/util/csv.h"
#include "collabnet/util/parallel.h"
#include "collabnet/util/strings.h"

namespace collabnet {

absl::StatusOr<TrackResult> TrackCohorts(const SnapshotSequence& seq,
                                         std::span<const AuthorCohort> cohorts,
                                         std::span<const Measure> measures,
                                         int threads) {
  if (cohorts.empty()) return absl::InvalidArgumentError("no cohorts");
  if (measures.empty()) return absl::InvalidArgumentError("no measures");
  if (seq.names == nullptr) {
    return absl::InvalidArgumentError("snapshot sequence has no name table");
  }

  TrackResult result;
  std::vector<std::vector<AuthorId>> ids(cohorts.size());
  for (size_t c = 0; c < cohorts.size(); ++c) {
    size_t unknown = 0;
    for (const std::string& name : cohorts[c].members) {
      if (auto id = seq.names->Find(name)) {
        ids[c].push_back(*id);
      } else {
        ++unknown;
      }
    }
    std::sort(ids[c].begin(), ids[c].end());
    ids[c].erase(std::unique(ids[c].begin(), ids[c].end()), ids[c].end());
    if (unknown > 0) {
      result.warnings.push_back(
          absl::StrCat("cohort '", cohorts[c].id, "': ", unknown,
                       " members are not authors and were ignored"));
    }
  }

  const size_t snapshots = seq.snapshots.size();
  // values[c * snapshots + s]; each slot is written by one task only.
  std::vector<MeasureValues> values(cohorts.size() * snapshots);
  std::vector<char> present(cohorts.size() * snapshots, 0);
  ParallelFor(0, values.size(), threads, [&](size_t i) {
    const size_t c = i / snapshots;
    const BipartiteAuthorshipGraph& g = seq.snapshots[i % snapshots].graph;
    const std::vector<AuthorId> here = PresentAuthors(g, ids[c]);
    present[i] = !here.empty();
    values[i] = EvaluateMeasures(g, here);
  });

  for (size_t c = 0; c < cohorts.size(); ++c) {
    const AuthorCohort& cohort = cohorts[c];
    const bool ever = std::any_of(present.begin() + c * snapshots,
                                  present.begin() + (c + 1) * snapshots,
                                  [](char p) { return p != 0; });
    if (!ever) {
      result.warnings.push_back(absl::StrCat(
          "cohort '", cohort.id, "' is absent from every snapshot"));
    }
    for (Measure m : measures) {
      MeasureSeries series{cohort.id, cohort.CohortClass(), m, {}};
      if (ever) {
        for (size_t s = 0; s < snapshots; ++s) {
          const int year = seq.snapshots[s].window_start;
          series.points.push_back({year - cohort.anchor_year.value_or(0),
                                   values[c * snapshots + s].Get(m)});
        }
      }
      result.series.push_back(std::move(series));
    }
  }
  return result;
}

void EmitBoxplotSeries(std::span<const MeasureSeries> series,
                       std::ostream& out) {
  WriteCsvRow(
      out, {"cohort_class", "measure", "relative_year", "cohort_id", "value"});
  for (const MeasureSeries& s : series) {
    const std::string measure(MeasureName(s.measure));
    for (const SeriesPoint& p : s.points) {
      WriteCsvRow(out, {s.cohort_class, measure, absl::StrCat(p.relative_year),
                        s.cohort_id, FormatOptional(p.value)});
    }
  }
}

}  // namespace collabnet

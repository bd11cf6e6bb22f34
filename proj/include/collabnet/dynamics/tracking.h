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

#ifndef COLLABNET_DYNAMICS_TRACKING_H_
#define COLLABNET_DYNAMICS_TRACKING_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/dynamics/cohorts.h"
#include "collabnet/dynamics/measures.h"
#include "collabnet/graph/snapshots.h"

namespace collabnet {

struct SeriesPoint {
  // Snapshot year minus the anchor year, or the snapshot year itself for
  // cohorts without an anchor. The snapshot year is its window start.
  int relative_year = 0;
  std::optional<double> value;  // nullopt is written as NA.

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

struct MeasureSeries {
  std::string cohort_id;
  std::string cohort_class;
  Measure measure = Measure::kAp;
  std::vector<SeriesPoint> points;  // Strictly increasing relative_year.
};

struct TrackResult {
  std::vector<MeasureSeries> series;  // Cohort-major, then measure order.
  std::vector<std::string> warnings;
};

// Evaluates every measure for every cohort on every snapshot, restricted
// to the members with a node in that snapshot. A snapshot containing no
// member yields undefined points. A cohort absent from every snapshot gets
// empty series and a warning. Fails when `cohorts` or `measures` is empty.
absl::StatusOr<TrackResult> TrackCohorts(const SnapshotSequence& seq,
                                         std::span<const AuthorCohort> cohorts,
                                         std::span<const Measure> measures,
                                         int threads = 1);

// Long-format CSV `cohort_class,measure,relative_year,cohort_id,value`, one
// row per series point.
void EmitBoxplotSeries(std::span<const MeasureSeries> series,
                       std::ostream& out);

}  // namespace collabnet

#endif  // COLLABNET_DYNAMICS_TRACKING_H_

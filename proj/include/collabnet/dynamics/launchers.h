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

#ifndef COLLABNET_DYNAMICS_LAUNCHERS_H_
#define COLLABNET_DYNAMICS_LAUNCHERS_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/clustering/overlap.h"
#include "collabnet/ingest/records.h"

namespace collabnet {

inline constexpr double kDefaultLauncherThreshold = 0.2;

struct LauncherScore {
  std::string seminar_id;
  double max_overlap = 0.0;
  // Venue attaining the maximum (first by name on ties); nullopt when no
  // venue shares an author with the invitees.
  std::optional<std::string> best_conference;
};

// For each seminar, the largest overlap coefficient between its invitee set
// (attending or not) and any venue set of the cover. Seminars scoring below
// `threshold` are returned as candidates, ascending by score and then by
// seminar id. Fails on an empty cover.
absl::StatusOr<std::vector<LauncherScore>> ClassifyAreaLaunchers(
    std::span<const SeminarRecord> seminars, const CoverSet& cover,
    double threshold = kDefaultLauncherThreshold);

// CSV `seminar_id,max_overlap,best_conference`.
void WriteLauncherCandidates(std::span<const LauncherScore> candidates,
                             std::ostream& out);

}  // namespace collabnet

#endif  // COLLABNET_DYNAMICS_LAUNCHERS_H_

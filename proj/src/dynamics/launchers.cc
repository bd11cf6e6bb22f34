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

#include "collabnet/dynamics/launchers.h"

#include <algorithm>
#include <map>

#include "absl/status/status.h"
#include "collabnet/util/csv.h"

namespace collabnet {

absl::StatusOr<std::vector<LauncherScore>> ClassifyAreaLaunchers(
    std::span<const SeminarRecord> seminars, const CoverSet& cover,
    double threshold) {
  if (cover.sets.empty()) {
    return absl::InvalidArgumentError("cover has no sets");
  }
  std::map<std::string, std::vector<std::string>> invitees;
  for (const SeminarRecord& r : seminars) {
    invitees[r.seminar_id].push_back(r.invitee_name);
  }
  std::vector<NamedSet> rows;
  for (auto& [id, names] : invitees) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    rows.push_back({id, std::move(names)});
  }
  if (rows.empty()) return std::vector<LauncherScore>{};

  auto matrix = BuildOverlapMatrix(rows, cover.sets, OverlapMeasure::kOverlap);
  if (!matrix.ok()) return matrix.status();

  std::vector<LauncherScore> candidates;
  for (size_t i = 0; i < rows.size(); ++i) {
    LauncherScore score{rows[i].name, 0.0, std::nullopt};
    for (size_t j = 0; j < cover.sets.size(); ++j) {
      const double v = matrix->At(i, j);
      if (v > score.max_overlap) {
        score.max_overlap = v;
        score.best_conference = cover.sets[j].name;
      }
    }
    if (score.max_overlap < threshold) candidates.push_back(std::move(score));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const LauncherScore& a, const LauncherScore& b) {
                     return a.max_overlap < b.max_overlap;
                   });
  return candidates;
}

void WriteLauncherCandidates(std::span<const LauncherScore> candidates,
                             std::ostream& out) {
  WriteCsvRow(out, {"seminar_id", "max_overlap", "best_conference"});
  for (const LauncherScore& c : candidates) {
    WriteCsvRow(out, {c.seminar_id, FormatDouble(c.max_overlap),
                      c.best_conference.value_or(std::string(kNaToken))});
  }
}

}  // namespace collabnet

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

#ifndef COLLABNET_DYNAMICS_COHORTS_H_
#define COLLABNET_DYNAMICS_COHORTS_H_

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/graph/authorship_graph.h"
#include "collabnet/ingest/records.h"

namespace collabnet {

enum class CohortLabel {
  kAttendees,
  kAbsentees,
  kRandomSample,
  kConnectedSample,
  kAll,
};

std::string_view CohortLabelName(CohortLabel label);
absl::StatusOr<CohortLabel> ParseCohortLabel(std::string_view name);

// Career stage buckets by years since the first publication.
enum class CareerStage { kEarly, kMid, kSenior };

std::string_view CareerStageName(CareerStage stage);
absl::StatusOr<CareerStage> ParseCareerStage(std::string_view name);

struct AuthorCohort {
  std::string id;
  CohortLabel label = CohortLabel::kAll;
  std::optional<int> anchor_year;  // Seminar year for seminar cohorts.
  std::optional<CareerStage> stage;
  std::vector<std::string> members;  // Sorted, unique author names.

  // `label` or `label/stage`; the grouping key of tracked series.
  std::string CohortClass() const;

  friend bool operator==(const AuthorCohort&, const AuthorCohort&) = default;
};

// Median number of attending invitees per seminar, rounded half away from
// zero. Fails when there are no seminars or the median rounds to 0.
absl::StatusOr<uint32_t> TypicalSeminarSize(
    std::span<const SeminarRecord> seminars);

struct SeminarCohortOptions {
  // Absentee cohorts below this size are not emitted.
  uint32_t min_absentees = 5;
};

// Attendee and absentee cohorts for every seminar, anchored at the seminar
// year. Invitees that are not in `authors` are left out; cohorts left empty
// are not emitted. Ids are `<seminar_id>/attendees` and
// `<seminar_id>/absentees`, in seminar id order.
std::vector<AuthorCohort> BuildSeminarCohorts(
    std::span<const SeminarRecord> seminars, const NameTable& authors,
    const SeminarCohortOptions& options = {});

// Every author in the table, as the reference class `all`.
AuthorCohort AllAuthorsCohort(const NameTable& authors);

// `count` independent uniform samples of `size` authors without
// replacement. Fails when size exceeds the pool (duplicates ignored) or is 0.
absl::StatusOr<std::vector<AuthorCohort>> SampleRandomCohorts(
    std::span<const std::string> pool, uint32_t size, uint32_t count,
    uint64_t seed);

// Breadth-first search over the bipartite graph from a random author,
// keeping author nodes in visit order until `size` are collected. When a
// component runs out, the search restarts from another random unvisited
// author. Fails when the graph has fewer than `size` authors or size is 0.
absl::StatusOr<std::vector<AuthorCohort>> SampleConnectedCohorts(
    const BipartiteAuthorshipGraph& g, uint32_t size, uint32_t count,
    uint64_t seed);

struct CareerSplit {
  std::array<std::vector<std::string>, 3> buckets;  // Indexed by CareerStage.
  // Authors without a known first year, or whose first year lies after the
  // reference year.
  std::vector<std::string> excluded;
};

struct CareerThresholds {
  int early = 5;
  int mid = 15;
};

// Career length is reference_year - first publication year; buckets are
// [0, early], (early, mid] and (mid, inf). `first_year` is indexed by id in
// `names`.
CareerSplit CareerStageSplit(std::span<const std::string> authors,
                             const NameTable& names,
                             std::span<const int> first_year,
                             int reference_year,
                             const CareerThresholds& thresholds = {});

// Splits each cohort into its career stages; empty stage cohorts are
// dropped. Stage cohorts get ids `<id>/<stage>`.
std::vector<AuthorCohort> SplitCohortsByCareer(
    std::span<const AuthorCohort> cohorts, const NameTable& names,
    std::span<const int> first_year, int reference_year,
    const CareerThresholds& thresholds = {});

// Cohort file: CSV `cohort_id,label,anchor_year,stage,member`, one row per
// member, NA for a missing anchor year or stage.
void WriteCohorts(std::span<const AuthorCohort> cohorts, std::ostream& out);
absl::StatusOr<std::vector<AuthorCohort>> ReadCohorts(std::istream& in);

}  // namespace collabnet

#endif  // COLLABNET_DYNAMICS_COHORTS_H_

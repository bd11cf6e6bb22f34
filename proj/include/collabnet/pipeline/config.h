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

#ifndef COLLABNET_PIPELINE_CONFIG_H_
#define COLLABNET_PIPELINE_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace collabnet {

// Pipeline stages in execution order.
inline constexpr std::string_view kStageNames[] = {
    "ingest",  "build",   "stats", "centrality", "cluster",
    "compare", "cohorts", "track", "launchers"};

// Every knob of a pipeline run. The text form is one `key = value` per
// line; lines starting with `#` are comments and blank lines are ignored.
// Keys are listed in the README. Unknown or repeated keys are an error so
// that typos do not silently fall back to defaults.
struct RunConfig {
  // Inputs and output.
  std::string publications;
  std::string publication_format = "tsv";
  std::string seminars;  // Optional.
  std::string output_dir = "collabnet-out";
  std::vector<std::string> stages{std::begin(kStageNames),
                                  std::end(kStageNames)};
  int threads = 1;

  // build
  int window = 1;
  int step = 1;
  uint32_t min_venue_authors = 10;

  // stats
  uint64_t powerlaw_xmin = 1;
  std::string powerlaw_method = "exact";
  uint32_t distance_samples = 1000;
  uint64_t distance_seed = 1;

  // centrality
  double centrality_tolerance = 1e-12;
  uint32_t centrality_max_iterations = 100000;
  uint32_t centrality_top = 100;

  // cluster
  uint64_t cluster_seed = 1;
  bool refine = true;

  // compare
  std::vector<std::string> compare_measures{"jaccard", "overlap"};
  uint32_t compare_top = 250;
  bool compare_baseline = true;
  uint64_t baseline_seed = 1;

  // cohorts
  uint32_t random_cohorts = 100;
  uint32_t connected_cohorts = 100;
  uint64_t cohort_seed = 1;
  uint32_t min_absentees = 5;
  int career_split_year = 0;  // 0 disables the split.

  // track
  std::vector<std::string> measures{"ap", "acp", "aca", "cpr_intra", "cad"};

  // launchers
  double launcher_threshold = 0.2;

  bool StageEnabled(std::string_view stage) const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

absl::StatusOr<RunConfig> ParseRunConfig(std::string_view text);
absl::StatusOr<RunConfig> LoadRunConfig(const std::string& path);

// Canonical text: every key in a fixed order, doubles in shortest
// round-trip form. ParseRunConfig(SerializeRunConfig(c)) == c.
std::string SerializeRunConfig(const RunConfig& config);

// SHA-256 of the canonical text.
std::string RunConfigHash(const RunConfig& config);

// Parameter ranges, stage names and the presence of the input files the
// enabled stages need.
absl::Status ValidateRunConfig(const RunConfig& config);

}  // namespace collabnet

#endif  // COLLABNET_PIPELINE_CONFIG_H_

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

#ifndef COLLABNET_PIPELINE_PIPELINE_H_
#define COLLABNET_PIPELINE_PIPELINE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/pipeline/config.h"
#include "collabnet/pipeline/stages.h"

namespace collabnet {

inline constexpr std::string_view kManifestFile = "manifest.json";
inline constexpr std::string_view kConfigFile = "config.txt";

struct PipelineResult {
  std::filesystem::path manifest;
  std::vector<std::string> warnings;  // Prefixed with the stage name.
};

// Options for every stage derived from one config. Stage `s` writes to
// `<output_dir>/<s>/` and reads what earlier stages left in the same tree.
struct StagePlan {
  IngestOptions ingest;
  BuildOptions build;
  StatsOptions stats;
  CentralityOptions centrality;
  ClusterOptions cluster;
  CompareOptions compare;
  CohortOptions cohorts;
  TrackOptions track;
  LauncherOptions launchers;
};
absl::StatusOr<StagePlan> PlanStages(const RunConfig& config);

// Validates `config`, then runs the enabled stages of its plan in order.
// A run with only later stages enabled reuses a previous run's
// intermediates.
//
// The manifest lists the config hash and, per completed stage, its version
// and the SHA-256 of every output. It is rewritten after each stage; on
// failure it names the failed stage, the outputs written so far are kept
// and the returned error names the stage too.
absl::StatusOr<PipelineResult> RunPipeline(const RunConfig& config,
                                           const StageContext& context);

// Hash recorded in the manifest. The output directory and thread count are
// left out since they do not change any output.
std::string ManifestConfigHash(const RunConfig& config);

}  // namespace collabnet

#endif  // COLLABNET_PIPELINE_PIPELINE_H_

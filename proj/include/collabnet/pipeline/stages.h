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

// One function per analysis stage. Each reads its inputs from files and
// writes its outputs below `out_dir`, so that the CLI subcommands and the
// full pipeline share the same code path.

#ifndef COLLABNET_PIPELINE_STAGES_H_
#define COLLABNET_PIPELINE_STAGES_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/clustering/overlap.h"
#include "collabnet/dynamics/measures.h"
#include "collabnet/ingest/publication_parser.h"
#include "collabnet/structure/degree_distribution.h"

namespace collabnet {

// File names inside each stage directory.
namespace layout {
inline constexpr std::string_view kPublications = "publications.tsv";
inline constexpr std::string_view kSeminars = "seminars.csv";
inline constexpr std::string_view kDiagnostics = "diagnostics.csv";
inline constexpr std::string_view kAlignment = "alignment.csv";
inline constexpr std::string_view kInvitees = "invitees.txt";
inline constexpr std::string_view kReport = "report.json";
inline constexpr std::string_view kAuthorshipGraph = "authorship.graph";
inline constexpr std::string_view kCoauthorshipGraph = "coauthorship.graph";
inline constexpr std::string_view kSnapshotDir = "snapshots";
inline constexpr std::string_view kSnapshotFile = "sequence.graph";
inline constexpr std::string_view kCover = "cover.csv";
inline constexpr std::string_view kDegreeHistogram = "degree_histogram.csv";
inline constexpr std::string_view kCoreHistogram = "core_histogram.csv";
inline constexpr std::string_view kAuthorRanking = "authors.csv";
inline constexpr std::string_view kPublicationRanking = "publications.csv";
inline constexpr std::string_view kClusters = "clusters.csv";
inline constexpr std::string_view kCohorts = "cohorts.csv";
inline constexpr std::string_view kSeries = "series.csv";
inline constexpr std::string_view kCandidates = "candidates.csv";
}  // namespace layout

struct StageContext {
  int threads = 1;
  // Progress messages; warnings are also returned in StageResult.
  std::function<void(std::string_view)> log = [](std::string_view) {};
};

struct StageResult {
  std::vector<std::filesystem::path> outputs;  // In write order.
  std::vector<std::string> warnings;
};

struct IngestOptions {
  std::filesystem::path publications;
  PublicationFormat format = PublicationFormat::kTsv;
  std::filesystem::path seminars;  // Empty when there is none.
  std::filesystem::path out_dir;
};
// Writes the cleaned records, parse diagnostics, and, with seminars, the
// cleaned seminar rows, the invitee-to-author alignment and the distinct
// matched invitee names.
absl::StatusOr<StageResult> RunIngest(const IngestOptions& options,
                                      const StageContext& context);

struct BuildOptions {
  // Tabular records, normally from ingest.
  std::filesystem::path publications;
  int window = 1;
  int step = 1;
  uint32_t min_venue_authors = 10;
  std::filesystem::path out_dir;
};
// The bipartite graph, its projection, the snapshot sequence (in a
// `snapshots/` subdirectory) and the venue cover.
absl::StatusOr<StageResult> RunBuild(const BuildOptions& options,
                                     const StageContext& context);

struct StatsOptions {
  // Coauthorship graph, or a bipartite graph to project.
  std::filesystem::path graph;
  uint64_t powerlaw_xmin = 1;
  PowerLawMethod powerlaw_method = PowerLawMethod::kExactDiscrete;
  uint32_t distance_samples = 1000;
  uint64_t distance_seed = 1;
  std::filesystem::path out_dir;
};
absl::StatusOr<StageResult> RunStats(const StatsOptions& options,
                                     const StageContext& context);

struct CentralityOptions {
  std::filesystem::path graph;   // Bipartite graph.
  std::filesystem::path subset;  // Optional; one author name per line.
  double tolerance = 1e-12;
  uint32_t max_iterations = 100000;
  uint32_t top = 100;  // Ranking rows written; 0 writes all.
  std::filesystem::path out_dir;
};
absl::StatusOr<StageResult> RunCentrality(const CentralityOptions& options,
                                          const StageContext& context);

struct ClusterOptions {
  std::filesystem::path graph;  // Bipartite or coauthorship graph.
  uint64_t seed = 1;
  bool refine = true;
  std::filesystem::path out_dir;
};
absl::StatusOr<StageResult> RunCluster(const ClusterOptions& options,
                                       const StageContext& context);

struct CompareOptions {
  std::filesystem::path clusters;
  std::filesystem::path cover;
  std::vector<OverlapMeasure> measures{OverlapMeasure::kJaccard,
                                       OverlapMeasure::kOverlap};
  uint32_t top = 250;
  bool baseline = true;
  uint64_t seed = 1;
  std::filesystem::path out_dir;
};
absl::StatusOr<StageResult> RunCompare(const CompareOptions& options,
                                       const StageContext& context);

struct CohortOptions {
  // Sequence file or the directory holding it.
  std::filesystem::path snapshots;
  std::filesystem::path seminars;
  // Bipartite graph for connected sampling. When empty, the union of the
  // snapshots is used.
  std::filesystem::path graph;
  uint32_t random = 100;
  uint32_t connected = 100;
  uint64_t seed = 1;
  uint32_t min_absentees = 5;
  int career_split_year = 0;  // 0 disables the split.
  std::filesystem::path out_dir;
};
absl::StatusOr<StageResult> RunCohorts(const CohortOptions& options,
                                       const StageContext& context);

struct TrackOptions {
  std::filesystem::path snapshots;
  std::filesystem::path cohorts;
  std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
  std::filesystem::path out_dir;
};
absl::StatusOr<StageResult> RunTrack(const TrackOptions& options,
                                     const StageContext& context);

struct LauncherOptions {
  std::filesystem::path seminars;
  std::filesystem::path cover;
  double threshold = 0.2;
  std::filesystem::path out_dir;
};
absl::StatusOr<StageResult> RunLaunchers(const LauncherOptions& options,
                                         const StageContext& context);

// `path` itself when it is a file, else the sequence file inside it.
std::filesystem::path ResolveSnapshotPath(const std::filesystem::path& path);

}  // namespace collabnet

#endif  // COLLABNET_PIPELINE_STAGES_H_

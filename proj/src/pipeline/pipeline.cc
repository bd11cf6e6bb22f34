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

#include "collabnet/pipeline/pipeline.h"

#include <functional>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/util/files.h"
#include "collabnet/util/strings.h"
#include "json.hpp"

namespace collabnet {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

constexpr std::string_view kManifestFormat = "collabnet-manifest/1";
// Bump when a stage's output format or semantics change.
constexpr int kStageVersion = 1;

template <typename T>
absl::StatusOr<std::vector<T>> ParseAll(
    const std::vector<std::string>& names,
    absl::StatusOr<T> (*parse)(std::string_view)) {
  std::vector<T> out;
  for (const std::string& n : names) {
    auto v = parse(n);
    if (!v.ok()) return v.status();
    out.push_back(*v);
  }
  return out;
}

bool Exists(const fs::path& p) {
  std::error_code ec;
  return fs::exists(p, ec);
}

using StageFn = std::function<absl::StatusOr<StageResult>()>;

}  // namespace

std::string ManifestConfigHash(const RunConfig& config) {
  RunConfig c = config;
  c.output_dir = RunConfig().output_dir;
  c.threads = 1;
  return RunConfigHash(c);
}

absl::StatusOr<StagePlan> PlanStages(const RunConfig& config) {
  auto format = ParsePublicationFormat(config.publication_format);
  if (!format.ok()) return format.status();
  auto compare_measures =
      ParseAll<OverlapMeasure>(config.compare_measures, &ParseOverlapMeasure);
  if (!compare_measures.ok()) return compare_measures.status();
  auto measures = ParseAll<Measure>(config.measures, &ParseMeasure);
  if (!measures.ok()) return measures.status();

  const fs::path root = config.output_dir;
  const fs::path ingest = root / "ingest";
  const fs::path build = root / "build";
  const fs::path seminars = ingest / layout::kSeminars;
  const fs::path bipartite = build / layout::kAuthorshipGraph;
  const fs::path cover = build / layout::kCover;
  const fs::path snapshots = build / layout::kSnapshotDir;

  StagePlan plan;
  plan.ingest.publications = config.publications;
  plan.ingest.format = *format;
  plan.ingest.seminars = config.seminars;
  plan.ingest.out_dir = ingest;

  plan.build.publications = ingest / layout::kPublications;
  plan.build.window = config.window;
  plan.build.step = config.step;
  plan.build.min_venue_authors = config.min_venue_authors;
  plan.build.out_dir = build;

  plan.stats.graph = build / layout::kCoauthorshipGraph;
  plan.stats.powerlaw_xmin = config.powerlaw_xmin;
  plan.stats.powerlaw_method = config.powerlaw_method == "continuous"
                                   ? PowerLawMethod::kContinuousApproximation
                                   : PowerLawMethod::kExactDiscrete;
  plan.stats.distance_samples = config.distance_samples;
  plan.stats.distance_seed = config.distance_seed;
  plan.stats.out_dir = root / "stats";

  plan.centrality.graph = bipartite;
  // Only known once ingest has run; checked again when the stage starts.
  if (Exists(ingest / layout::kInvitees)) {
    plan.centrality.subset = ingest / layout::kInvitees;
  }
  plan.centrality.tolerance = config.centrality_tolerance;
  plan.centrality.max_iterations = config.centrality_max_iterations;
  plan.centrality.top = config.centrality_top;
  plan.centrality.out_dir = root / "centrality";

  plan.cluster.graph = bipartite;
  plan.cluster.seed = config.cluster_seed;
  plan.cluster.refine = config.refine;
  plan.cluster.out_dir = root / "cluster";

  plan.compare.clusters = plan.cluster.out_dir / layout::kClusters;
  plan.compare.cover = cover;
  plan.compare.measures = *compare_measures;
  plan.compare.top = config.compare_top;
  plan.compare.baseline = config.compare_baseline;
  plan.compare.seed = config.baseline_seed;
  plan.compare.out_dir = root / "compare";

  plan.cohorts.snapshots = snapshots;
  plan.cohorts.seminars = seminars;
  plan.cohorts.graph = bipartite;
  plan.cohorts.random = config.random_cohorts;
  plan.cohorts.connected = config.connected_cohorts;
  plan.cohorts.seed = config.cohort_seed;
  plan.cohorts.min_absentees = config.min_absentees;
  plan.cohorts.career_split_year = config.career_split_year;
  plan.cohorts.out_dir = root / "cohorts";

  plan.track.snapshots = snapshots;
  plan.track.cohorts = plan.cohorts.out_dir / layout::kCohorts;
  plan.track.measures = *measures;
  plan.track.out_dir = root / "track";

  plan.launchers.seminars = seminars;
  plan.launchers.cover = cover;
  plan.launchers.threshold = config.launcher_threshold;
  plan.launchers.out_dir = root / "launchers";
  return plan;
}

absl::StatusOr<PipelineResult> RunPipeline(const RunConfig& config,
                                           const StageContext& context) {
  if (auto s = ValidateRunConfig(config); !s.ok()) return s;
  auto planned = PlanStages(config);
  if (!planned.ok()) return planned.status();
  StagePlan& plan = *planned;
  const fs::path root = config.output_dir;

  std::vector<std::pair<std::string_view, StageFn>> stages;
  stages.emplace_back("ingest",
                      [&] { return RunIngest(plan.ingest, context); });
  stages.emplace_back("build", [&] { return RunBuild(plan.build, context); });
  stages.emplace_back("stats", [&] { return RunStats(plan.stats, context); });
  stages.emplace_back("centrality", [&] {
    const fs::path invitees = root / "ingest" / layout::kInvitees;
    if (Exists(invitees)) plan.centrality.subset = invitees;
    return RunCentrality(plan.centrality, context);
  });
  stages.emplace_back("cluster",
                      [&] { return RunCluster(plan.cluster, context); });
  stages.emplace_back("compare",
                      [&] { return RunCompare(plan.compare, context); });
  stages.emplace_back("cohorts",
                      [&] { return RunCohorts(plan.cohorts, context); });
  stages.emplace_back("track", [&] { return RunTrack(plan.track, context); });
  stages.emplace_back("launchers",
                      [&] { return RunLaunchers(plan.launchers, context); });

  PipelineResult result;
  result.manifest = root / kManifestFile;
  Json manifest;
  manifest["format"] = kManifestFormat;
  manifest["config_sha256"] = ManifestConfigHash(config);
  manifest["stages"] = Json::array();
  manifest["status"] = "running";

  auto write_manifest = [&]() {
    return WriteFile(result.manifest, [&](std::ostream& out) {
      out << manifest.dump(2) << '\n';
    });
  };
  if (auto s = WriteFile(
          root / kConfigFile,
          [&](std::ostream& out) { out << SerializeRunConfig(config); });
      !s.ok()) {
    return s;
  }

  for (const auto& [name, run] : stages) {
    if (!config.StageEnabled(name)) continue;
    context.log(absl::StrCat("stage ", Absl(name)));
    auto stage = run();
    if (!stage.ok()) {
      manifest["status"] = "failed";
      manifest["failed_stage"] = name;
      // The stage error is the one worth reporting.
      (void)write_manifest();
      return absl::Status(stage.status().code(),
                          absl::StrCat("stage ", Absl(name),
                                       " failed: ", stage.status().message()));
    }
    Json outputs = Json::array();
    for (const fs::path& path : stage->outputs) {
      auto digest = Sha256OfFile(path);
      if (!digest.ok()) return digest.status();
      const std::string relative =
          path.lexically_relative(root).generic_string();
      outputs.push_back({{"path", relative}, {"sha256", *digest}});
    }
    manifest["stages"].push_back(
        {{"name", name}, {"version", kStageVersion}, {"outputs", outputs}});
    for (std::string& w : stage->warnings) {
      result.warnings.push_back(absl::StrCat(Absl(name), ": ", w));
    }
    if (auto s = write_manifest(); !s.ok()) return s;
  }
  manifest["status"] = "ok";
  if (auto s = write_manifest(); !s.ok()) return s;
  return result;
}

}  // namespace collabnet

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

// Command-line front end. Every subcommand starts from the run config
// (defaults, or the file given with --config), applies its flags on top and
// runs one stage; `run` executes the whole pipeline.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "collabnet/pipeline/config.h"
#include "collabnet/pipeline/pipeline.h"
#include "collabnet/pipeline/stages.h"

namespace collabnet {
namespace {

using ConfigEdit = std::function<void(RunConfig&)>;
using PlanEdit = std::function<void(StagePlan&)>;

// Flags are applied after parsing, once the config file is loaded.
struct Edits {
  std::vector<ConfigEdit> config;
  std::vector<PlanEdit> plan;
};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

template <typename T>
void ConfigFlag(CLI::App* app, Edits& edits, const std::string& name,
                T RunConfig::* field, const std::string& help) {
  app->add_option_function<T>(
      name,
      [&edits, field](const T& v) {
        edits.config.push_back([field, v](RunConfig& c) { c.*field = v; });
      },
      help);
}

void ListFlag(CLI::App* app, Edits& edits, const std::string& name,
              std::vector<std::string> RunConfig::* field,
              const std::string& help) {
  app->add_option_function<std::string>(
      name,
      [&edits, field](const std::string& v) {
        edits.config.push_back(
            [field, v](RunConfig& c) { c.*field = SplitList(v); });
      },
      help);
}

template <typename Options>
void PathFlag(CLI::App* app, Edits& edits, const std::string& name,
              Options StagePlan::* stage,
              std::filesystem::path Options::* field, const std::string& help) {
  app->add_option_function<std::string>(
      name,
      [&edits, stage, field](const std::string& v) {
        edits.plan.push_back(
            [stage, field, v](StagePlan& p) { (p.*stage).*field = v; });
      },
      help);
}

template <typename Options>
void OutFlag(CLI::App* app, Edits& edits, Options StagePlan::* stage) {
  PathFlag(app, edits, "--out", stage, &Options::out_dir,
           "Output directory (default: <output_dir>/<stage>)");
}

void Print(const StageResult& result) {
  for (const std::string& w : result.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  for (const auto& path : result.outputs) std::cout << path.string() << '\n';
}

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << '\n';
  return 1;
}

int Main(int argc, char** argv) {
  CLI::App app{"Collaboration network analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  int threads = 0;
  bool verbose = false;
  app.add_option("--config", config_path, "Run config file (key = value)")
      ->check(CLI::ExistingFile);
  app.add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verbose", verbose, "Progress messages on stderr");

  Edits edits;
  std::string selected;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&selected, name] { selected = name; });
    return s;
  };

  CLI::App* ingest = sub("ingest", "Parse and clean the raw inputs");
  ConfigFlag(ingest, edits, "--pubs,--publications", &RunConfig::publications,
             "Publication dump");
  ConfigFlag(ingest, edits, "--format", &RunConfig::publication_format,
             "tsv or xml");
  ConfigFlag(ingest, edits, "--seminars", &RunConfig::seminars,
             "Seminar invitation CSV");
  OutFlag(ingest, edits, &StagePlan::ingest);

  CLI::App* build = sub("build", "Build graphs, snapshots and venue cover");
  build->add_option_function<std::string>(
      "--in",
      [&edits](const std::string& v) {
        edits.plan.push_back([v](StagePlan& p) {
          p.build.publications =
              std::filesystem::is_directory(v)
                  ? std::filesystem::path(v) / layout::kPublications
                  : std::filesystem::path(v);
        });
      },
      "Ingest output directory or cleaned publications TSV");
  ConfigFlag(build, edits, "--window", &RunConfig::window,
             "Snapshot window in years");
  ConfigFlag(build, edits, "--step", &RunConfig::step,
             "Snapshot step in years");
  ConfigFlag(build, edits, "--min-venue-authors", &RunConfig::min_venue_authors,
             "Smallest venue kept in the cover");
  OutFlag(build, edits, &StagePlan::build);

  CLI::App* stats = sub("stats", "Structural statistics");
  PathFlag(stats, edits, "--graph", &StagePlan::stats, &StatsOptions::graph,
           "Coauthorship or bipartite graph");
  ConfigFlag(stats, edits, "--powerlaw-xmin,--xmin", &RunConfig::powerlaw_xmin,
             "Power-law fit lower cutoff");
  ConfigFlag(stats, edits, "--powerlaw-method,--method",
             &RunConfig::powerlaw_method, "exact or continuous");
  ConfigFlag(stats, edits, "--distance-samples,--samples",
             &RunConfig::distance_samples, "BFS sources for the mean distance");
  ConfigFlag(stats, edits, "--seed", &RunConfig::distance_seed,
             "Source sampling seed");
  OutFlag(stats, edits, &StagePlan::stats);

  CLI::App* centrality = sub("centrality", "Eigenvector centrality");
  PathFlag(centrality, edits, "--graph", &StagePlan::centrality,
           &CentralityOptions::graph, "Bipartite graph");
  PathFlag(centrality, edits, "--subset", &StagePlan::centrality,
           &CentralityOptions::subset, "Author names, one per line");
  ConfigFlag(centrality, edits, "--tol,--tolerance",
             &RunConfig::centrality_tolerance, "Convergence tolerance");
  ConfigFlag(centrality, edits, "--max-iter,--max-iterations",
             &RunConfig::centrality_max_iterations, "Iteration cap");
  ConfigFlag(centrality, edits, "--top", &RunConfig::centrality_top,
             "Ranking rows (0 = all)");
  OutFlag(centrality, edits, &StagePlan::centrality);

  CLI::App* cluster = sub("cluster", "Modularity clustering");
  PathFlag(cluster, edits, "--graph", &StagePlan::cluster,
           &ClusterOptions::graph, "Bipartite or coauthorship graph");
  ConfigFlag(cluster, edits, "--seed", &RunConfig::cluster_seed,
             "Node order seed");
  cluster->add_flag_function(
      "--no-refine",
      [&edits](std::int64_t) {
        edits.config.push_back([](RunConfig& c) { c.refine = false; });
      },
      "Skip the refinement sweep");
  OutFlag(cluster, edits, &StagePlan::cluster);

  CLI::App* compare = sub("compare", "Compare clusters with the venue cover");
  PathFlag(compare, edits, "--clusters", &StagePlan::compare,
           &CompareOptions::clusters, "Cluster assignment CSV");
  PathFlag(compare, edits, "--cover", &StagePlan::compare,
           &CompareOptions::cover, "Venue cover CSV");
  ListFlag(compare, edits, "--measure,--measures", &RunConfig::compare_measures,
           "Comma-separated: jaccard,overlap");
  ConfigFlag(compare, edits, "--top", &RunConfig::compare_top,
             "Largest clusters compared");
  compare
      ->add_option_function<std::string>(
          "--baseline",
          [&edits](const std::string& v) {
            edits.config.push_back(
                [v](RunConfig& c) { c.compare_baseline = v == "random"; });
          },
          "random or none")
      ->check(CLI::IsMember({"random", "none"}));
  ConfigFlag(compare, edits, "--seed", &RunConfig::baseline_seed,
             "Baseline seed");
  OutFlag(compare, edits, &StagePlan::compare);

  CLI::App* cohorts = sub("cohorts", "Build author cohorts");
  PathFlag(cohorts, edits, "--snapshots", &StagePlan::cohorts,
           &CohortOptions::snapshots, "Snapshot file or directory");
  PathFlag(cohorts, edits, "--seminars", &StagePlan::cohorts,
           &CohortOptions::seminars, "Cleaned seminar CSV");
  PathFlag(cohorts, edits, "--graph", &StagePlan::cohorts,
           &CohortOptions::graph, "Bipartite graph for connected sampling");
  ConfigFlag(cohorts, edits, "--random", &RunConfig::random_cohorts,
             "Random cohorts");
  ConfigFlag(cohorts, edits, "--connected", &RunConfig::connected_cohorts,
             "Connected cohorts");
  ConfigFlag(cohorts, edits, "--seed", &RunConfig::cohort_seed,
             "Sampling seed");
  ConfigFlag(cohorts, edits, "--min-absentees", &RunConfig::min_absentees,
             "Smallest absentee cohort kept");
  ConfigFlag(cohorts, edits, "--career-split,--career-split-year",
             &RunConfig::career_split_year,
             "Split by career stage at this year (0 = off)");
  OutFlag(cohorts, edits, &StagePlan::cohorts);

  CLI::App* track = sub("track", "Measure cohorts over the snapshots");
  PathFlag(track, edits, "--snapshots", &StagePlan::track,
           &TrackOptions::snapshots, "Snapshot file or directory");
  PathFlag(track, edits, "--cohorts", &StagePlan::track, &TrackOptions::cohorts,
           "Cohort CSV");
  ListFlag(track, edits, "--measures", &RunConfig::measures,
           "Comma-separated: ap,acp,aca,cpr_intra,cad");
  OutFlag(track, edits, &StagePlan::track);

  CLI::App* launchers = sub("launchers", "Find area-launcher seminars");
  PathFlag(launchers, edits, "--seminars", &StagePlan::launchers,
           &LauncherOptions::seminars, "Cleaned seminar CSV");
  PathFlag(launchers, edits, "--cover", &StagePlan::launchers,
           &LauncherOptions::cover, "Venue cover CSV");
  ConfigFlag(launchers, edits, "--threshold", &RunConfig::launcher_threshold,
             "Maximum overlap of a launcher");
  OutFlag(launchers, edits, &StagePlan::launchers);

  CLI::App* run = sub("run", "Run the configured pipeline");
  ConfigFlag(run, edits, "--publications", &RunConfig::publications,
             "Publication dump");
  ConfigFlag(run, edits, "--seminars", &RunConfig::seminars,
             "Seminar invitation CSV");
  ConfigFlag(run, edits, "--out", &RunConfig::output_dir, "Output root");
  ListFlag(run, edits, "--stages", &RunConfig::stages,
           "Comma-separated stage subset");

  CLI11_PARSE(app, argc, argv);

  RunConfig config;
  if (!config_path.empty()) {
    auto loaded = LoadRunConfig(config_path);
    if (!loaded.ok()) return Fail(loaded.status());
    config = std::move(*loaded);
  }
  for (const ConfigEdit& edit : edits.config) edit(config);
  if (threads > 0) config.threads = threads;

  StageContext context;
  context.threads = config.threads;
  if (verbose) {
    context.log = [](std::string_view msg) {
      std::cerr << "collabnet: " << msg << '\n';
    };
  }

  if (selected == "run") {
    auto result = RunPipeline(config, context);
    if (!result.ok()) return Fail(result.status());
    for (const std::string& w : result->warnings) {
      std::cerr << "warning: " << w << '\n';
    }
    std::cout << result->manifest.string() << '\n';
    return 0;
  }

  // Check one stage's parameters; input files are checked when opened.
  RunConfig single = config;
  single.stages = {selected};
  if (selected != "ingest") single.publications.clear();
  if (auto s = ValidateRunConfig(single); !s.ok()) return Fail(s);
  auto plan = PlanStages(config);
  if (!plan.ok()) return Fail(plan.status());
  for (const PlanEdit& edit : edits.plan) edit(*plan);

  absl::StatusOr<StageResult> result;
  if (selected == "ingest") {
    result = RunIngest(plan->ingest, context);
  } else if (selected == "build") {
    result = RunBuild(plan->build, context);
  } else if (selected == "stats") {
    result = RunStats(plan->stats, context);
  } else if (selected == "centrality") {
    result = RunCentrality(plan->centrality, context);
  } else if (selected == "cluster") {
    result = RunCluster(plan->cluster, context);
  } else if (selected == "compare") {
    result = RunCompare(plan->compare, context);
  } else if (selected == "cohorts") {
    result = RunCohorts(plan->cohorts, context);
  } else if (selected == "track") {
    result = RunTrack(plan->track, context);
  } else {
    result = RunLaunchers(plan->launchers, context);
  }
  if (!result.ok()) return Fail(result.status());
  Print(*result);
  return 0;
}

}  // namespace
}  // namespace collabnet

int main(int argc, char** argv) { return collabnet::Main(argc, argv); }

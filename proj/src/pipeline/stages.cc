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

#include "collabnet/pipeline/stages.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/centrality/eigenvector.h"
#include "collabnet/clustering/cluster_io.h"
#include "collabnet/clustering/louvain.h"
#include "collabnet/clustering/modularity.h"
#include "collabnet/dynamics/cohorts.h"
#include "collabnet/dynamics/launchers.h"
#include "collabnet/dynamics/tracking.h"
#include "collabnet/graph/graph_io.h"
#include "collabnet/graph/snapshots.h"
#include "collabnet/ingest/name_alignment.h"
#include "collabnet/ingest/name_normalization.h"
#include "collabnet/ingest/seminar_parser.h"
#include "collabnet/structure/components.h"
#include "collabnet/structure/core_decomposition.h"
#include "collabnet/structure/distance.h"
#include "collabnet/util/csv.h"
#include "collabnet/util/files.h"
#include "collabnet/util/strings.h"
#include "json.hpp"

namespace collabnet {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

// Prefixes a status message with what was being done.
absl::Status Annotate(const absl::Status& s, std::string_view what) {
  return absl::Status(s.code(), absl::StrCat(Absl(what), ": ", s.message()));
}

// Collects output paths while writing.
class Outputs {
 public:
  explicit Outputs(StageResult& result) : result_(result) {}

  absl::Status Write(const fs::path& path,
                     const std::function<void(std::ostream&)>& writer) {
    if (auto s = WriteFile(path, writer); !s.ok()) return s;
    result_.outputs.push_back(path);
    return absl::OkStatus();
  }

  // For writers that can fail midway.
  absl::Status WriteChecked(
      const fs::path& path,
      const std::function<absl::Status(std::ostream&)>& writer) {
    absl::Status inner;
    if (auto s = Write(path, [&](std::ostream& out) { inner = writer(out); });
        !s.ok()) {
      return s;
    }
    return inner;
  }

  absl::Status WriteJson(const fs::path& path, const Json& json) {
    return Write(path, [&](std::ostream& out) { out << json.dump(2) << '\n'; });
  }

 private:
  StageResult& result_;
};

Json OptionalNumber(std::optional<double> v) {
  if (!v.has_value() || !std::isfinite(*v)) return nullptr;
  return *v;
}

absl::StatusOr<PublicationParseResult> ReadPublicationFile(
    const fs::path& path, PublicationFormat format) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  auto parsed = ParsePublications(*in, format);
  if (!parsed.ok()) return Annotate(parsed.status(), path.string());
  return parsed;
}

absl::StatusOr<std::vector<SeminarRecord>> ReadSeminarFile(
    const fs::path& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  auto parsed = ParseSeminars(*in);
  if (!parsed.ok()) return Annotate(parsed.status(), path.string());
  return std::move(parsed->records);
}

absl::StatusOr<CoverSet> ReadCoverFile(const fs::path& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  auto cover = ReadCover(*in);
  if (!cover.ok()) return Annotate(cover.status(), path.string());
  return cover;
}

void WriteDiagnostics(std::span<const ParseDiagnostic> diagnostics,
                      std::string_view source, std::ostream& out) {
  for (const ParseDiagnostic& d : diagnostics) {
    WriteCsvRow(out,
                {std::string(source), absl::StrCat(d.location), d.record_key,
                 d.severity == DiagnosticSeverity::kNote ? "note" : "skipped",
                 d.message});
  }
}

// Full bipartite graph rebuilt from the snapshot windows: every author of
// the name table and each distinct publication once.
absl::StatusOr<BipartiteAuthorshipGraph> UnionOfSnapshots(
    const SnapshotSequence& seq) {
  std::vector<PublicationInfo> pubs;
  std::vector<std::vector<AuthorId>> authors;
  std::set<std::string> seen;
  for (const Snapshot& s : seq.snapshots) {
    for (PublicationId p = 0; p < s.graph.publication_count(); ++p) {
      if (!seen.insert(s.graph.Publication(p).key).second) continue;
      pubs.push_back(s.graph.Publication(p));
      const auto list = s.graph.AuthorsOf(p);
      authors.emplace_back(list.begin(), list.end());
    }
  }
  return BipartiteAuthorshipGraph::Create(seq.names, seq.names->size(),
                                          std::move(pubs), std::move(authors));
}

}  // namespace

fs::path ResolveSnapshotPath(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) return path / layout::kSnapshotFile;
  return path;
}

absl::StatusOr<StageResult> RunIngest(const IngestOptions& options,
                                      const StageContext& context) {
  StageResult result;
  Outputs out(result);
  context.log(absl::StrCat("reading ", options.publications.string()));
  auto pubs = ReadPublicationFile(options.publications, options.format);
  if (!pubs.ok()) return pubs.status();
  if (pubs->records.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        options.publications.string(), ": no publication records"));
  }
  const fs::path dir = options.out_dir;
  if (auto s = out.WriteChecked(dir / layout::kPublications,
                                [&](std::ostream& o) {
                                  return WritePublicationsTsv(pubs->records, o);
                                });
      !s.ok()) {
    return s;
  }

  std::optional<SeminarParseResult> seminars;
  if (!options.seminars.empty()) {
    auto in = OpenForRead(options.seminars);
    if (!in.ok()) return in.status();
    auto parsed = ParseSeminars(*in);
    if (!parsed.ok())
      return Annotate(parsed.status(), options.seminars.string());
    seminars = std::move(*parsed);
  }

  if (auto s = out.Write(
          dir / layout::kDiagnostics,
          [&](std::ostream& o) {
            WriteCsvRow(
                o, {"source", "location", "record", "severity", "message"});
            WriteDiagnostics(pubs->diagnostics, "publications", o);
            if (seminars.has_value()) {
              WriteDiagnostics(seminars->diagnostics, "seminars", o);
            }
          });
      !s.ok()) {
    return s;
  }

  Json report;
  report["publications"] = {{"records", pubs->records.size()},
                            {"malformed", pubs->malformed_count},
                            {"diagnostics", pubs->diagnostics.size()}};
  if (seminars.has_value()) {
    if (auto s = out.Write(
            dir / layout::kSeminars,
            [&](std::ostream& o) { WriteSeminarsCsv(seminars->records, o); });
        !s.ok()) {
      return s;
    }
    std::set<std::string> author_set;
    for (const PublicationRecord& r : pubs->records) {
      author_set.insert(r.authors.begin(), r.authors.end());
    }
    const std::vector<std::string> authors(author_set.begin(),
                                           author_set.end());
    std::vector<std::string> invitees;
    for (const SeminarRecord& r : seminars->records) {
      invitees.push_back(r.invitee_name);
    }
    const NameAlignment alignment = AlignNames(authors, invitees);
    if (auto s = out.Write(
            dir / layout::kAlignment,
            [&](std::ostream& o) { WriteAlignmentCsv(alignment, o); });
        !s.ok()) {
      return s;
    }
    if (auto s = out.Write(dir / layout::kInvitees,
                           [&](std::ostream& o) {
                             for (const auto& [name, index] :
                                  alignment.matched) {
                               o << name << '\n';
                             }
                           });
        !s.ok()) {
      return s;
    }
    report["seminars"] = {{"records", seminars->records.size()},
                          {"malformed", seminars->malformed_count},
                          {"diagnostics", seminars->diagnostics.size()},
                          {"invitees_matched", alignment.matched.size()},
                          {"invitees_unmatched", alignment.unmatched.size()},
                          {"match_fraction", alignment.match_fraction}};
  }
  if (auto s = out.WriteJson(dir / layout::kReport, report); !s.ok()) return s;
  return result;
}

absl::StatusOr<StageResult> RunBuild(const BuildOptions& options,
                                     const StageContext& context) {
  StageResult result;
  Outputs out(result);
  auto pubs =
      ReadPublicationFile(options.publications, PublicationFormat::kTsv);
  if (!pubs.ok()) return pubs.status();
  const std::vector<PublicationRecord>& records = pubs->records;

  context.log("building the bipartite graph");
  auto graph = BuildAuthorshipGraph(records);
  if (!graph.ok()) return graph.status();
  const CoauthorshipGraph projection = ProjectCoauthorship(*graph);
  context.log("building snapshots");
  auto seq = BuildTimeResolved(records, options.window, options.step);
  if (!seq.ok()) return seq.status();
  const CoverSet cover = TopicalClusters(records, options.min_venue_authors);
  if (cover.sets.empty()) {
    result.warnings.push_back(absl::StrCat("no venue has at least ",
                                           options.min_venue_authors,
                                           " authors; the cover is empty"));
  }

  const fs::path dir = options.out_dir;
  absl::Status s = out.WriteChecked(
      dir / layout::kAuthorshipGraph,
      [&](std::ostream& o) { return WriteAuthorshipGraph(*graph, o); });
  if (s.ok()) {
    s = out.WriteChecked(
        dir / layout::kCoauthorshipGraph,
        [&](std::ostream& o) { return WriteCoauthorshipGraph(projection, o); });
  }
  if (s.ok()) {
    s = out.WriteChecked(
        dir / layout::kSnapshotDir / layout::kSnapshotFile,
        [&](std::ostream& o) { return WriteSnapshotSequence(*seq, o); });
  }
  if (s.ok()) {
    s = out.Write(dir / layout::kCover,
                  [&](std::ostream& o) { WriteCover(cover, o); });
  }
  if (!s.ok()) return s;

  Json report;
  report["authorship"] = {{"authors", graph->author_count()},
                          {"publications", graph->publication_count()},
                          {"nodes", graph->node_count()},
                          {"edges", graph->edge_count()}};
  report["coauthorship"] = {{"nodes", projection.node_count()},
                            {"edges", projection.edge_count()}};
  Json windows = Json::array();
  for (const Snapshot& snap : seq->snapshots) {
    windows.push_back({{"start", snap.window_start},
                       {"end", snap.window_end},
                       {"authors", snap.graph.author_count()},
                       {"publications", snap.graph.publication_count()}});
  }
  report["snapshots"] = {
      {"width", seq->width}, {"step", seq->step}, {"windows", windows}};
  report["cover"] = {{"sets", cover.sets.size()},
                     {"min_authors", options.min_venue_authors}};
  if (auto w = out.WriteJson(dir / layout::kReport, report); !w.ok()) return w;
  return result;
}

absl::StatusOr<StageResult> RunStats(const StatsOptions& options,
                                     const StageContext& context) {
  StageResult result;
  Outputs out(result);
  auto loaded = LoadCoauthorshipGraph(options.graph);
  if (!loaded.ok()) return loaded.status();
  const Graph& g = loaded->graph();

  context.log("components and cores");
  const ComponentLabeling components = ConnectedComponents(g);
  const CoreDecomposition cores = CoreNumbers(g);
  const DegreeHistogram degrees = DegreeHistogramOf(g);

  Json report;
  report["nodes"] = g.node_count();
  report["edges"] = g.edge_count();
  report["components"] = {
      {"count", components.component_count()},
      {"largest", components.sizes.empty() ? 0 : components.sizes[0]},
      {"giant_fraction", components.giant_fraction},
      {"isolated_fraction", components.isolated_fraction}};
  report["degeneracy"] = cores.degeneracy;

  auto fit =
      FitPowerLaw(degrees, options.powerlaw_xmin, options.powerlaw_method);
  if (fit.ok()) {
    report["powerlaw"] = {
        {"gamma", fit->gamma},
        {"xmin", fit->xmin},
        {"tail_count", fit->tail_count},
        {"method", fit->method == PowerLawMethod::kExactDiscrete
                       ? "exact"
                       : "continuous"}};
  } else {
    report["powerlaw"] = nullptr;
    result.warnings.push_back(
        absl::StrCat("power-law fit: ", fit.status().message()));
  }

  context.log("sampling distances");
  auto distance = SampleAverageDistance(g, options.distance_samples,
                                        options.distance_seed, context.threads);
  if (distance.ok()) {
    report["distance"] = {{"mean", distance->mean_distance},
                          {"sources", distance->sources},
                          {"reached_pairs", distance->reached_pairs},
                          {"seed", options.distance_seed}};
  } else {
    report["distance"] = nullptr;
    result.warnings.push_back(
        absl::StrCat("average distance: ", distance.status().message()));
  }

  const fs::path dir = options.out_dir;
  absl::Status s =
      out.Write(dir / layout::kDegreeHistogram, [&](std::ostream& o) {
        WriteCsvRow(o, {"degree", "count"});
        for (const auto& [k, n] : degrees) {
          WriteCsvRow(o, {absl::StrCat(k), absl::StrCat(n)});
        }
      });
  if (s.ok()) {
    s = out.Write(dir / layout::kCoreHistogram, [&](std::ostream& o) {
      WriteCsvRow(o, {"core", "count"});
      for (const auto& [k, n] : CoreHistogram(cores)) {
        WriteCsvRow(o, {absl::StrCat(k), absl::StrCat(n)});
      }
    });
  }
  if (s.ok()) s = out.WriteJson(dir / layout::kReport, report);
  if (!s.ok()) return s;
  return result;
}

absl::StatusOr<StageResult> RunCentrality(const CentralityOptions& options,
                                          const StageContext& context) {
  StageResult result;
  Outputs out(result);
  auto g = LoadAuthorshipGraph(options.graph);
  if (!g.ok()) return g.status();

  EigenvectorOptions eig;
  eig.tolerance = options.tolerance;
  eig.max_iterations = options.max_iterations;
  eig.threads = context.threads;
  context.log("power iteration");
  auto centrality = EigenvectorCentrality(*g, eig);
  if (!centrality.ok()) return centrality.status();

  Json summary;
  summary["eigenvalue"] = centrality->eigenvalue;
  summary["iterations"] = centrality->iterations;
  summary["residual"] = centrality->residual;
  summary["tolerance"] = options.tolerance;

  if (!options.subset.empty()) {
    auto text = ReadFileToString(options.subset);
    if (!text.ok()) return text.status();
    std::vector<std::string> names;
    for (std::string_view line : SplitOn(*text, '\n')) {
      std::string name = NormalizeName(line);
      if (!name.empty()) names.push_back(std::move(name));
    }
    auto cmp = CompareMedianCentrality(*g, *centrality, names);
    if (cmp.ok()) {
      summary["subset"] = {{"size", names.size()},
                           {"found", cmp->members_found},
                           {"median_in", OptionalNumber(cmp->median_in)},
                           {"median_out", OptionalNumber(cmp->median_out)}};
    } else {
      summary["subset"] = nullptr;
      result.warnings.push_back(
          absl::StrCat("median comparison: ", cmp.status().message()));
    }
  }

  auto write_ranking = [&](const fs::path& path, std::string_view column,
                           const std::vector<RankedNode>& ranked) {
    return out.Write(path, [&](std::ostream& o) {
      WriteCsvRow(o, {"rank", std::string(column), "score"});
      for (size_t i = 0; i < ranked.size(); ++i) {
        WriteCsvRow(o, {absl::StrCat(i + 1), ranked[i].name,
                        FormatDouble(ranked[i].score)});
      }
    });
  };
  const fs::path dir = options.out_dir;
  absl::Status s = write_ranking(dir / layout::kAuthorRanking, "author",
                                 RankAuthors(*g, *centrality, options.top));
  if (s.ok()) {
    s = write_ranking(dir / layout::kPublicationRanking, "publication",
                      RankPublications(*g, *centrality, options.top));
  }
  if (s.ok()) s = out.WriteJson(dir / layout::kReport, summary);
  if (!s.ok()) return s;
  return result;
}

absl::StatusOr<StageResult> RunCluster(const ClusterOptions& options,
                                       const StageContext& context) {
  StageResult result;
  Outputs out(result);
  auto kind = PeekGraphKind(options.graph);
  if (!kind.ok()) return kind.status();

  std::optional<BipartiteAuthorshipGraph> bipartite;
  std::optional<CoauthorshipGraph> coauthors;
  Graph g;
  if (*kind == GraphFileKind::kBipartite) {
    auto loaded = LoadAuthorshipGraph(options.graph);
    if (!loaded.ok()) return loaded.status();
    bipartite = std::move(*loaded);
    g = bipartite->ToGraph();
  } else {
    auto loaded = LoadCoauthorshipGraph(options.graph);
    if (!loaded.ok()) return loaded.status();
    coauthors = std::move(*loaded);
    g = coauthors->graph();
  }

  LouvainOptions louvain;
  louvain.seed = options.seed;
  context.log("multilevel clustering");
  auto clustered = Louvain(g, louvain);
  if (!clustered.ok()) return clustered.status();
  auto unrefined_q = Modularity(g, clustered->clustering);
  if (!unrefined_q.ok()) return unrefined_q.status();
  Clustering clustering = clustered->clustering;
  if (options.refine) {
    context.log("refinement");
    auto refined = Refine(clustered->hierarchy, louvain);
    if (!refined.ok()) return refined.status();
    clustering = std::move(*refined);
  }
  auto q = Modularity(g, clustering);
  if (!q.ok()) return q.status();

  std::map<uint64_t, uint64_t> size_counts;
  for (uint64_t size : clustering.ClusterSizes()) ++size_counts[size];
  Json sizes = Json::array();
  for (const auto& [size, count] : size_counts) {
    sizes.push_back({{"size", size}, {"count", count}});
  }
  Json summary;
  summary["modularity"] = *q;
  summary["unrefined_modularity"] = *unrefined_q;
  summary["refined"] = options.refine;
  summary["cluster_count"] = clustering.cluster_count();
  summary["levels"] = clustered->hierarchy.size();
  summary["seed"] = options.seed;
  summary["size_distribution"] = sizes;

  const fs::path dir = options.out_dir;
  absl::Status s = out.Write(dir / layout::kClusters, [&](std::ostream& o) {
    if (bipartite.has_value()) {
      WriteClusterAssignment(*bipartite, clustering, o);
    } else {
      WriteClusterAssignment(*coauthors, clustering, o);
    }
  });
  if (s.ok()) s = out.WriteJson(dir / layout::kReport, summary);
  if (!s.ok()) return s;
  return result;
}

absl::StatusOr<StageResult> RunCompare(const CompareOptions& options,
                                       const StageContext& context) {
  StageResult result;
  Outputs out(result);
  std::vector<NamedSet> clusters;
  {
    auto in = OpenForRead(options.clusters);
    if (!in.ok()) return in.status();
    auto read = ReadAuthorClusters(*in);
    if (!read.ok()) return Annotate(read.status(), options.clusters.string());
    clusters = std::move(*read);
  }
  auto cover = ReadCoverFile(options.cover);
  if (!cover.ok()) return cover.status();
  if (clusters.empty()) {
    return absl::InvalidArgumentError("clustering has no author clusters");
  }
  if (cover->sets.empty()) {
    return absl::InvalidArgumentError("cover has no sets");
  }
  const std::vector<NamedSet> rows = LargestSets(clusters, options.top);

  std::vector<NamedSet> baseline;
  if (options.baseline) {
    std::vector<std::string> pool;
    for (const NamedSet& c : clusters) {
      pool.insert(pool.end(), c.members.begin(), c.members.end());
    }
    auto drawn = RandomBaseline(clusters, rows.size(), pool, options.seed);
    if (!drawn.ok()) return drawn.status();
    baseline = std::move(*drawn);
  }

  Json summary;
  summary["rows"] = rows.size();
  summary["columns"] = cover->sets.size();
  summary["top"] = options.top;
  const fs::path dir = options.out_dir;
  for (OverlapMeasure m : options.measures) {
    const std::string name(OverlapMeasureName(m));
    context.log(absl::StrCat("overlap matrix (", name, ")"));
    auto matrix = BuildOverlapMatrix(rows, cover->sets, m, context.threads);
    if (!matrix.ok()) return matrix.status();
    auto topical = MeanMaxOverlap(*matrix);
    if (!topical.ok()) return topical.status();
    if (auto s =
            out.Write(dir / absl::StrCat("overlap_", name, ".csv"),
                      [&](std::ostream& o) { WriteOverlapMatrix(*matrix, o); });
        !s.ok()) {
      return s;
    }
    summary["mean_max_overlap"][name]["topical"] = *topical;
    if (options.baseline) {
      auto random =
          BuildOverlapMatrix(baseline, cover->sets, m, context.threads);
      if (!random.ok()) return random.status();
      auto value = MeanMaxOverlap(*random);
      if (!value.ok()) return value.status();
      if (auto s = out.Write(
              dir / absl::StrCat("baseline_", name, ".csv"),
              [&](std::ostream& o) { WriteOverlapMatrix(*random, o); });
          !s.ok()) {
        return s;
      }
      summary["mean_max_overlap"][name]["random_baseline"] = *value;
    }
  }
  if (options.baseline) summary["baseline_seed"] = options.seed;
  if (auto s = out.WriteJson(dir / layout::kReport, summary); !s.ok()) return s;
  return result;
}

absl::StatusOr<StageResult> RunCohorts(const CohortOptions& options,
                                       const StageContext& context) {
  StageResult result;
  Outputs out(result);
  auto seq = LoadSnapshotSequence(ResolveSnapshotPath(options.snapshots));
  if (!seq.ok()) return seq.status();
  auto seminars = ReadSeminarFile(options.seminars);
  if (!seminars.ok()) return seminars.status();
  const NameTable& names = *seq->names;

  SeminarCohortOptions seminar_options;
  seminar_options.min_absentees = options.min_absentees;
  std::vector<AuthorCohort> cohorts =
      BuildSeminarCohorts(*seminars, names, seminar_options);
  cohorts.push_back(AllAuthorsCohort(names));

  Json summary;
  std::optional<uint32_t> typical;
  if (options.random > 0 || options.connected > 0) {
    auto size = TypicalSeminarSize(*seminars);
    if (!size.ok()) return size.status();
    typical = std::min<uint32_t>(*size, names.size());
    summary["typical_size"] = *typical;
  }
  if (options.random > 0) {
    context.log("random cohorts");
    auto random = SampleRandomCohorts(names.names(), *typical, options.random,
                                      options.seed);
    if (!random.ok()) return random.status();
    cohorts.insert(cohorts.end(), random->begin(), random->end());
  }
  if (options.connected > 0) {
    context.log("connected cohorts");
    absl::StatusOr<BipartiteAuthorshipGraph> g =
        options.graph.empty() ? UnionOfSnapshots(*seq)
                              : LoadAuthorshipGraph(options.graph);
    if (!g.ok()) return g.status();
    // A separate stream so the two samplers do not share draws.
    auto connected = SampleConnectedCohorts(*g, *typical, options.connected,
                                            options.seed + 1);
    if (!connected.ok()) return connected.status();
    cohorts.insert(cohorts.end(), connected->begin(), connected->end());
  }
  if (options.career_split_year != 0) {
    std::vector<AuthorCohort> split = SplitCohortsByCareer(
        cohorts, names, seq->first_year, options.career_split_year);
    summary["career_split_year"] = options.career_split_year;
    cohorts.insert(cohorts.end(), std::make_move_iterator(split.begin()),
                   std::make_move_iterator(split.end()));
  }

  std::map<std::string, uint64_t> by_class;
  for (const AuthorCohort& c : cohorts) ++by_class[c.CohortClass()];
  summary["cohorts"] = by_class;
  summary["seed"] = options.seed;
  const fs::path dir = options.out_dir;
  absl::Status s = out.Write(dir / layout::kCohorts, [&](std::ostream& o) {
    WriteCohorts(cohorts, o);
  });
  if (s.ok()) s = out.WriteJson(dir / layout::kReport, summary);
  if (!s.ok()) return s;
  return result;
}

absl::StatusOr<StageResult> RunTrack(const TrackOptions& options,
                                     const StageContext& context) {
  StageResult result;
  Outputs out(result);
  auto seq = LoadSnapshotSequence(ResolveSnapshotPath(options.snapshots));
  if (!seq.ok()) return seq.status();
  std::vector<AuthorCohort> cohorts;
  {
    auto in = OpenForRead(options.cohorts);
    if (!in.ok()) return in.status();
    auto read = ReadCohorts(*in);
    if (!read.ok()) return Annotate(read.status(), options.cohorts.string());
    cohorts = std::move(*read);
  }
  context.log("tracking cohorts");
  auto tracked = TrackCohorts(*seq, cohorts, options.measures, context.threads);
  if (!tracked.ok()) return tracked.status();
  result.warnings = std::move(tracked->warnings);
  if (auto s = out.Write(
          options.out_dir / layout::kSeries,
          [&](std::ostream& o) { EmitBoxplotSeries(tracked->series, o); });
      !s.ok()) {
    return s;
  }
  return result;
}

absl::StatusOr<StageResult> RunLaunchers(const LauncherOptions& options,
                                         const StageContext& context) {
  StageResult result;
  Outputs out(result);
  auto seminars = ReadSeminarFile(options.seminars);
  if (!seminars.ok()) return seminars.status();
  auto cover = ReadCoverFile(options.cover);
  if (!cover.ok()) return cover.status();
  context.log("scoring seminars against venues");
  auto candidates = ClassifyAreaLaunchers(*seminars, *cover, options.threshold);
  if (!candidates.ok()) return candidates.status();
  if (auto s = out.Write(
          options.out_dir / layout::kCandidates,
          [&](std::ostream& o) { WriteLauncherCandidates(*candidates, o); });
      !s.ok()) {
    return s;
  }
  return result;
}

}  // namespace collabnet

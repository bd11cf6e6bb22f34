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

#include "collabnet/dynamics/cohorts.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/util/csv.h"
#include "collabnet/util/random.h"
#include "collabnet/util/strings.h"

namespace collabnet {
namespace {

void SortUnique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::optional<CareerStage> StageOf(int length,
                                   const CareerThresholds& thresholds) {
  if (length < 0) return std::nullopt;
  if (length <= thresholds.early) return CareerStage::kEarly;
  if (length <= thresholds.mid) return CareerStage::kMid;
  return CareerStage::kSenior;
}

}  // namespace

std::string_view CohortLabelName(CohortLabel label) {
  switch (label) {
    case CohortLabel::kAttendees:
      return "attendees";
    case CohortLabel::kAbsentees:
      return "absentees";
    case CohortLabel::kRandomSample:
      return "random_sample";
    case CohortLabel::kConnectedSample:
      return "connected_sample";
    case CohortLabel::kAll:
      return "all";
  }
  return "";
}

absl::StatusOr<CohortLabel> ParseCohortLabel(std::string_view name) {
  for (CohortLabel l : {CohortLabel::kAttendees, CohortLabel::kAbsentees,
                        CohortLabel::kRandomSample,
                        CohortLabel::kConnectedSample, CohortLabel::kAll}) {
    if (CohortLabelName(l) == name) return l;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown cohort label '", Absl(name), "'"));
}

std::string_view CareerStageName(CareerStage stage) {
  switch (stage) {
    case CareerStage::kEarly:
      return "early";
    case CareerStage::kMid:
      return "mid";
    case CareerStage::kSenior:
      return "senior";
  }
  return "";
}

absl::StatusOr<CareerStage> ParseCareerStage(std::string_view name) {
  for (CareerStage s :
       {CareerStage::kEarly, CareerStage::kMid, CareerStage::kSenior}) {
    if (CareerStageName(s) == name) return s;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown career stage '", Absl(name), "'"));
}

std::string AuthorCohort::CohortClass() const {
  std::string out(CohortLabelName(label));
  if (stage.has_value()) {
    out += '/';
    out += CareerStageName(*stage);
  }
  return out;
}

absl::StatusOr<uint32_t> TypicalSeminarSize(
    std::span<const SeminarRecord> seminars) {
  std::map<std::string_view, uint32_t> attendees;
  for (const SeminarRecord& r : seminars) {
    attendees[r.seminar_id] += r.attended ? 1 : 0;
  }
  std::vector<uint32_t> counts;
  for (const auto& [id, n] : attendees) counts.push_back(n);
  if (counts.empty()) return absl::InvalidArgumentError("no seminars");
  std::sort(counts.begin(), counts.end());
  const size_t mid = counts.size() / 2;
  const double median = counts.size() % 2 == 1
                            ? counts[mid]
                            : 0.5 * (counts[mid - 1] + counts[mid]);
  const auto size = static_cast<uint32_t>(std::lround(median));
  if (size == 0) {
    return absl::InvalidArgumentError("median seminar has no attendees");
  }
  return size;
}

std::vector<AuthorCohort> BuildSeminarCohorts(
    std::span<const SeminarRecord> seminars, const NameTable& authors,
    const SeminarCohortOptions& options) {
  struct Groups {
    int year = 0;
    std::vector<std::string> attended, absent;
  };
  std::map<std::string, Groups> by_seminar;
  for (const SeminarRecord& r : seminars) {
    Groups& g = by_seminar[r.seminar_id];
    g.year = r.seminar_year;
    if (!authors.Find(r.invitee_name).has_value()) continue;
    (r.attended ? g.attended : g.absent).push_back(r.invitee_name);
  }
  std::vector<AuthorCohort> out;
  for (auto& [id, g] : by_seminar) {
    SortUnique(g.attended);
    SortUnique(g.absent);
    if (!g.attended.empty()) {
      out.push_back({absl::StrCat(id, "/attendees"), CohortLabel::kAttendees,
                     g.year, std::nullopt, std::move(g.attended)});
    }
    if (!g.absent.empty() && g.absent.size() >= options.min_absentees) {
      out.push_back({absl::StrCat(id, "/absentees"), CohortLabel::kAbsentees,
                     g.year, std::nullopt, std::move(g.absent)});
    }
  }
  return out;
}

AuthorCohort AllAuthorsCohort(const NameTable& authors) {
  AuthorCohort all{"all", CohortLabel::kAll, std::nullopt, std::nullopt,
                   authors.names()};
  SortUnique(all.members);
  return all;
}

absl::StatusOr<std::vector<AuthorCohort>> SampleRandomCohorts(
    std::span<const std::string> pool, uint32_t size, uint32_t count,
    uint64_t seed) {
  std::vector<std::string> authors(pool.begin(), pool.end());
  SortUnique(authors);
  if (size == 0 || size > authors.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cohort size ", size, " must be in [1, ", authors.size(), "]"));
  }
  Rng rng(seed);
  std::vector<AuthorCohort> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    AuthorCohort c{absl::StrCat("random/", i),
                   CohortLabel::kRandomSample,
                   std::nullopt,
                   std::nullopt,
                   {}};
    for (uint32_t k : rng.SampleWithoutReplacement(
             static_cast<uint32_t>(authors.size()), size)) {
      c.members.push_back(authors[k]);
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

absl::StatusOr<std::vector<AuthorCohort>> SampleConnectedCohorts(
    const BipartiteAuthorshipGraph& g, uint32_t size, uint32_t count,
    uint64_t seed) {
  if (size == 0 || size > g.author_count()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cohort size ", size, " must be in [1, ", g.author_count(), "]"));
  }
  Rng rng(seed);
  std::vector<AuthorCohort> out;
  out.reserve(count);
  absl::flat_hash_set<AuthorId> seen_authors;
  absl::flat_hash_set<PublicationId> seen_pubs;
  std::deque<AuthorId> queue;
  for (uint32_t i = 0; i < count; ++i) {
    seen_authors.clear();
    seen_pubs.clear();
    std::vector<AuthorId> picked;
    while (picked.size() < size) {
      // Restart from a fresh author; rejection keeps each unvisited author
      // equally likely.
      AuthorId start;
      do {
        start = static_cast<AuthorId>(rng.UniformIndex(g.author_count()));
      } while (seen_authors.contains(start));
      seen_authors.insert(start);
      queue.assign(1, start);
      while (!queue.empty() && picked.size() < size) {
        const AuthorId a = queue.front();
        queue.pop_front();
        picked.push_back(a);
        for (PublicationId p : g.PublicationsOf(a)) {
          if (!seen_pubs.insert(p).second) continue;
          for (AuthorId b : g.AuthorsOf(p)) {
            if (seen_authors.insert(b).second) queue.push_back(b);
          }
        }
      }
    }
    AuthorCohort c{absl::StrCat("connected/", i),
                   CohortLabel::kConnectedSample,
                   std::nullopt,
                   std::nullopt,
                   {}};
    for (AuthorId a : picked) c.members.push_back(g.AuthorName(a));
    SortUnique(c.members);
    out.push_back(std::move(c));
  }
  return out;
}

CareerSplit CareerStageSplit(std::span<const std::string> authors,
                             const NameTable& names,
                             std::span<const int> first_year,
                             int reference_year,
                             const CareerThresholds& thresholds) {
  CareerSplit split;
  for (const std::string& name : authors) {
    const auto id = names.Find(name);
    std::optional<CareerStage> stage;
    if (id.has_value() && *id < first_year.size()) {
      stage = StageOf(reference_year - first_year[*id], thresholds);
    }
    if (stage.has_value()) {
      split.buckets[static_cast<size_t>(*stage)].push_back(name);
    } else {
      split.excluded.push_back(name);
    }
  }
  return split;
}

std::vector<AuthorCohort> SplitCohortsByCareer(
    std::span<const AuthorCohort> cohorts, const NameTable& names,
    std::span<const int> first_year, int reference_year,
    const CareerThresholds& thresholds) {
  std::vector<AuthorCohort> out;
  for (const AuthorCohort& c : cohorts) {
    CareerSplit split = CareerStageSplit(c.members, names, first_year,
                                         reference_year, thresholds);
    for (size_t s = 0; s < split.buckets.size(); ++s) {
      if (split.buckets[s].empty()) continue;
      const auto stage = static_cast<CareerStage>(s);
      out.push_back({absl::StrCat(c.id, "/", Absl(CareerStageName(stage))),
                     c.label, c.anchor_year, stage,
                     std::move(split.buckets[s])});
    }
  }
  return out;
}

void WriteCohorts(std::span<const AuthorCohort> cohorts, std::ostream& out) {
  WriteCsvRow(out, {"cohort_id", "label", "anchor_year", "stage", "member"});
  for (const AuthorCohort& c : cohorts) {
    const std::string anchor = c.anchor_year.has_value()
                                   ? absl::StrCat(*c.anchor_year)
                                   : std::string(kNaToken);
    const std::string stage = c.stage.has_value()
                                  ? std::string(CareerStageName(*c.stage))
                                  : std::string(kNaToken);
    const std::string label(CohortLabelName(c.label));
    for (const std::string& m : c.members) {
      WriteCsvRow(out, {c.id, label, anchor, stage, m});
    }
  }
}

absl::StatusOr<std::vector<AuthorCohort>> ReadCohorts(std::istream& in) {
  std::vector<AuthorCohort> cohorts;
  absl::flat_hash_map<std::string, size_t> index;
  absl::Status s = ReadCsvTable(
      in, {"cohort_id", "label", "anchor_year", "stage", "member"},
      [&](const std::vector<std::string>& f, size_t line) -> absl::Status {
        auto error = [&](std::string_view what) {
          return absl::InvalidArgumentError(
              absl::StrCat("line ", line, ": ", Absl(what)));
        };
        if (f[0].empty() || f[4].empty()) return error("empty id or member");
        auto label = ParseCohortLabel(f[1]);
        if (!label.ok()) return error(Std(label.status().message()));
        std::optional<int> anchor;
        if (f[2] != kNaToken) {
          int year = 0;
          if (!ParseInteger(f[2], &year)) return error("bad anchor_year");
          anchor = year;
        }
        std::optional<CareerStage> stage;
        if (f[3] != kNaToken) {
          auto parsed = ParseCareerStage(f[3]);
          if (!parsed.ok()) return error(Std(parsed.status().message()));
          stage = *parsed;
        }
        auto [it, inserted] = index.try_emplace(f[0], cohorts.size());
        if (inserted) {
          cohorts.push_back({f[0], *label, anchor, stage, {}});
        }
        AuthorCohort& c = cohorts[it->second];
        if (c.label != *label || c.anchor_year != anchor || c.stage != stage) {
          return error(
              absl::StrCat("cohort '", f[0], "' has inconsistent attributes"));
        }
        c.members.push_back(f[4]);
        return absl::OkStatus();
      });
  if (!s.ok()) return s;
  for (AuthorCohort& c : cohorts) SortUnique(c.members);
  return cohorts;
}

}  // namespace collabnet

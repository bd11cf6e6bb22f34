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

#include "collabnet/dynamics/measures.h"

#include <algorithm>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/util/strings.h"

namespace collabnet {
namespace {

// Publication id -> number of members of A among its authors.
absl::flat_hash_map<PublicationId, uint32_t> MemberHits(
    const BipartiteAuthorshipGraph& g, std::span<const AuthorId> present) {
  absl::flat_hash_map<PublicationId, uint32_t> hits;
  for (AuthorId a : present) {
    for (PublicationId p : g.PublicationsOf(a)) ++hits[p];
  }
  return hits;
}

template <typename Keep>
std::vector<PublicationId> SelectPublications(
    const absl::flat_hash_map<PublicationId, uint32_t>& hits, Keep&& keep) {
  std::vector<PublicationId> out;
  for (const auto& [p, count] : hits) {
    if (keep(p, count)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Contains(std::span<const AuthorId> sorted, AuthorId a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

}  // namespace

std::vector<AuthorId> PresentAuthors(const BipartiteAuthorshipGraph& g,
                                     std::span<const AuthorId> authors) {
  const auto end =
      std::lower_bound(authors.begin(), authors.end(), g.author_count());
  return std::vector<AuthorId>(authors.begin(), end);
}

std::vector<PublicationId> PublicationSet(const BipartiteAuthorshipGraph& g,
                                          std::span<const AuthorId> authors) {
  const auto present = PresentAuthors(g, authors);
  return SelectPublications(MemberHits(g, present),
                            [](PublicationId, uint32_t) { return true; });
}

std::vector<PublicationId> CopublicationSet(const BipartiteAuthorshipGraph& g,
                                            std::span<const AuthorId> authors) {
  const auto present = PresentAuthors(g, authors);
  return SelectPublications(
      MemberHits(g, present),
      [&](PublicationId p, uint32_t) { return g.AuthorsOf(p).size() >= 2; });
}

std::vector<PublicationId> IntraCopublicationSet(
    const BipartiteAuthorshipGraph& g, std::span<const AuthorId> authors) {
  const auto present = PresentAuthors(g, authors);
  return SelectPublications(
      MemberHits(g, present),
      [](PublicationId, uint32_t count) { return count >= 2; });
}

std::vector<AuthorId> CoauthorSet(const BipartiteAuthorshipGraph& g,
                                  std::span<const AuthorId> authors) {
  absl::flat_hash_set<AuthorId> coauthors;
  for (AuthorId a : PresentAuthors(g, authors)) {
    for (PublicationId p : g.PublicationsOf(a)) {
      for (AuthorId b : g.AuthorsOf(p)) {
        if (b != a) coauthors.insert(b);
      }
    }
  }
  std::vector<AuthorId> out(coauthors.begin(), coauthors.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view MeasureName(Measure m) {
  switch (m) {
    case Measure::kAp:
      return "ap";
    case Measure::kAcp:
      return "acp";
    case Measure::kAca:
      return "aca";
    case Measure::kCprIntra:
      return "cpr_intra";
    case Measure::kCad:
      return "cad";
  }
  return "";
}

absl::StatusOr<Measure> ParseMeasure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (MeasureName(m) == name) return m;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown measure '", Absl(name), "' (ap, acp, aca, cpr_intra, cad)"));
}

absl::StatusOr<std::vector<Measure>> ParseMeasureList(std::string_view list) {
  std::vector<Measure> out;
  for (std::string_view part : SplitOn(list, ',')) {
    auto m = ParseMeasure(StripWhitespace(part));
    if (!m.ok()) return m.status();
    if (std::find(out.begin(), out.end(), *m) != out.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("measure '", Absl(MeasureName(*m)), "' listed twice"));
    }
    out.push_back(*m);
  }
  return out;
}

std::optional<double> MeasureValues::Get(Measure m) const {
  switch (m) {
    case Measure::kAp:
      return ap;
    case Measure::kAcp:
      return acp;
    case Measure::kAca:
      return aca;
    case Measure::kCprIntra:
      return cpr_intra;
    case Measure::kCad:
      return cad;
  }
  return std::nullopt;
}

MeasureValues EvaluateMeasures(const BipartiteAuthorshipGraph& g,
                               std::span<const AuthorId> authors) {
  const std::vector<AuthorId> present = PresentAuthors(g, authors);
  MeasureValues out;
  const size_t k = present.size();
  if (k == 0) return out;

  const auto hits = MemberHits(g, present);
  size_t copubs = 0, intra = 0;
  for (const auto& [p, count] : hits) {
    if (g.AuthorsOf(p).size() >= 2) ++copubs;
    if (count >= 2) ++intra;
  }

  absl::flat_hash_set<AuthorId> coauthors;
  // Each coauthored pair inside A is seen once from either end.
  uint64_t pair_ends = 0;
  std::vector<AuthorId> inside;
  for (AuthorId a : present) {
    inside.clear();
    for (PublicationId p : g.PublicationsOf(a)) {
      for (AuthorId b : g.AuthorsOf(p)) {
        if (b == a) continue;
        coauthors.insert(b);
        if (Contains(present, b)) inside.push_back(b);
      }
    }
    std::sort(inside.begin(), inside.end());
    pair_ends += std::unique(inside.begin(), inside.end()) - inside.begin();
  }

  const double size = static_cast<double>(k);
  out.ap = static_cast<double>(hits.size()) / size;
  out.acp = static_cast<double>(copubs) / size;
  out.aca = static_cast<double>(coauthors.size()) / size;
  if (copubs > 0) {
    out.cpr_intra = static_cast<double>(intra) / static_cast<double>(copubs);
  }
  if (k >= 2) {
    const double slots = size * (size - 1.0) / 2.0;
    out.cad = static_cast<double>(pair_ends / 2) / slots;
  }
  return out;
}

std::optional<double> EvaluateMeasure(const BipartiteAuthorshipGraph& g,
                                      std::span<const AuthorId> authors,
                                      Measure m) {
  return EvaluateMeasures(g, authors).Get(m);
}

}  // namespace collabnet

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

#ifndef COLLABNET_DYNAMICS_MEASURES_H_
#define COLLABNET_DYNAMICS_MEASURES_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "collabnet/graph/authorship_graph.h"

namespace collabnet {

// Author sets throughout are sorted, duplicate-free id lists. Ids that are
// not authors of `g` are ignored by every function here.

// P(A): publications with at least one author in A, ascending.
std::vector<PublicationId> PublicationSet(const BipartiteAuthorshipGraph& g,
                                          std::span<const AuthorId> authors);
// CP(A): publications of A with at least two authors in total.
std::vector<PublicationId> CopublicationSet(const BipartiteAuthorshipGraph& g,
                                            std::span<const AuthorId> authors);
// CP_intra(A): publications with at least two authors in A.
std::vector<PublicationId> IntraCopublicationSet(
    const BipartiteAuthorshipGraph& g, std::span<const AuthorId> authors);
// CA(A): authors sharing a publication with some member a, other than a.
std::vector<AuthorId> CoauthorSet(const BipartiteAuthorshipGraph& g,
                                  std::span<const AuthorId> authors);

// The members of `authors` that have a node in `g`.
std::vector<AuthorId> PresentAuthors(const BipartiteAuthorshipGraph& g,
                                     std::span<const AuthorId> authors);

enum class Measure { kAp, kAcp, kAca, kCprIntra, kCad };

inline constexpr std::array<Measure, 5> kAllMeasures = {
    Measure::kAp, Measure::kAcp, Measure::kAca, Measure::kCprIntra,
    Measure::kCad};

std::string_view MeasureName(Measure m);
absl::StatusOr<Measure> ParseMeasure(std::string_view name);
// Comma-separated names; duplicates are rejected.
absl::StatusOr<std::vector<Measure>> ParseMeasureList(std::string_view list);

// All five measures of one author set. nullopt marks an undefined value:
// every measure when A is empty, cpr_intra when CP(A) is empty and cad when
// |A| < 2.
struct MeasureValues {
  std::optional<double> ap, acp, aca, cpr_intra, cad;

  std::optional<double> Get(Measure m) const;
};

// Computes every set in one sweep over the members' publications.
MeasureValues EvaluateMeasures(const BipartiteAuthorshipGraph& g,
                               std::span<const AuthorId> authors);

std::optional<double> EvaluateMeasure(const BipartiteAuthorshipGraph& g,
                                      std::span<const AuthorId> authors,
                                      Measure m);

}  // namespace collabnet

#endif  // COLLABNET_DYNAMICS_MEASURES_H_

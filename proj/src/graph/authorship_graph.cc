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

#include "collabnet/graph/authorship_graph.h"

#include <algorithm>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "collabnet/ingest/name_normalization.h"
#include "collabnet/util/strings.h"

namespace collabnet {

NameTable::NameTable(std::vector<std::string> names) {
  names_.reserve(names.size());
  for (std::string& n : names) {
    index_.try_emplace(n, static_cast<AuthorId>(names_.size()));
    names_.push_back(std::move(n));
  }
}

AuthorId NameTable::Intern(std::string_view name) {
  auto [it, inserted] = index_.try_emplace(
      std::string(name), static_cast<AuthorId>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

std::optional<AuthorId> NameTable::Find(std::string_view name) const {
  if (auto it = index_.find(Absl(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

absl::StatusOr<BipartiteAuthorshipGraph> BipartiteAuthorshipGraph::Create(
    std::shared_ptr<const NameTable> names, uint32_t author_count,
    std::vector<PublicationInfo> publications,
    std::vector<std::vector<AuthorId>> publication_authors) {
  if (names == nullptr || author_count > names->size()) {
    return absl::InvalidArgumentError(
        "author_count exceeds the size of the name table");
  }
  if (publications.size() != publication_authors.size()) {
    return absl::InvalidArgumentError(
        "publication table and author lists differ in length");
  }
  BipartiteAuthorshipGraph g;
  g.names_ = std::move(names);
  g.author_count_ = author_count;

  std::vector<uint64_t> author_degree(author_count, 0);
  g.pub_offsets_.reserve(publications.size() + 1);
  for (size_t p = 0; p < publication_authors.size(); ++p) {
    const auto& authors = publication_authors[p];
    if (authors.empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "publication '", publications[p].key, "' has no authors"));
    }
    for (size_t i = 0; i < authors.size(); ++i) {
      if (authors[i] >= author_count) {
        return absl::InvalidArgumentError(absl::StrCat(
            "publication '", publications[p].key, "' references author id ",
            authors[i], " >= author count ", author_count));
      }
      ++author_degree[authors[i]];
      g.pub_authors_.push_back(authors[i]);
    }
    g.pub_offsets_.push_back(g.pub_authors_.size());
    std::vector<AuthorId> sorted(authors);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "publication '", publications[p].key, "' lists an author twice"));
    }
  }

  g.author_offsets_.assign(static_cast<size_t>(author_count) + 1, 0);
  for (AuthorId a = 0; a < author_count; ++a) {
    g.author_offsets_[a + 1] = g.author_offsets_[a] + author_degree[a];
  }
  g.author_pubs_.resize(g.pub_authors_.size());
  std::vector<uint64_t> cursor(g.author_offsets_.begin(),
                               g.author_offsets_.end() - 1);
  for (PublicationId p = 0; p < publication_authors.size(); ++p) {
    for (AuthorId a : publication_authors[p]) g.author_pubs_[cursor[a]++] = p;
  }
  g.publications_ = std::move(publications);
  return g;
}

std::optional<AuthorId> BipartiteAuthorshipGraph::FindAuthor(
    std::string_view name) const {
  auto id = names_->Find(name);
  if (id.has_value() && *id < author_count_) return id;
  return std::nullopt;
}

Graph BipartiteAuthorshipGraph::ToGraph() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edge_count());
  for (PublicationId p = 0; p < publication_count(); ++p) {
    for (AuthorId a : AuthorsOf(p)) {
      edges.emplace_back(AuthorNode(a), PublicationNode(p));
    }
  }
  return Graph::FromEdges(node_count(), std::move(edges));
}

CoauthorshipGraph::CoauthorshipGraph(std::shared_ptr<const NameTable> names,
                                     Graph graph)
    : names_(std::move(names)), graph_(std::move(graph)) {}

absl::StatusOr<BipartiteAuthorshipGraph> BuildAuthorshipGraph(
    std::span<const PublicationRecord> records) {
  if (records.empty()) {
    return absl::InvalidArgumentError("cannot build a graph from no records");
  }
  auto names = std::make_shared<NameTable>();
  std::vector<PublicationInfo> publications;
  std::vector<std::vector<AuthorId>> authors;
  publications.reserve(records.size());
  authors.reserve(records.size());
  for (const PublicationRecord& r : records) {
    std::vector<AuthorId> ids;
    ids.reserve(r.authors.size());
    absl::flat_hash_set<AuthorId> seen;
    for (const std::string& raw : r.authors) {
      const std::string name = NormalizeName(raw);
      if (name.empty()) continue;
      const AuthorId id = names->Intern(name);
      if (seen.insert(id).second) ids.push_back(id);
    }
    if (ids.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("record '", r.pub_key, "' has no author"));
    }
    publications.push_back({r.pub_key, r.year, r.venue_key});
    authors.push_back(std::move(ids));
  }
  const uint32_t author_count = names->size();
  return BipartiteAuthorshipGraph::Create(std::move(names), author_count,
                                          std::move(publications),
                                          std::move(authors));
}

CoauthorshipGraph ProjectCoauthorship(const BipartiteAuthorshipGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (PublicationId p = 0; p < g.publication_count(); ++p) {
    const auto authors = g.AuthorsOf(p);
    for (size_t i = 0; i < authors.size(); ++i) {
      for (size_t j = i + 1; j < authors.size(); ++j) {
        edges.emplace_back(authors[i], authors[j]);
      }
    }
  }
  return CoauthorshipGraph(
      g.name_table(), Graph::FromEdges(g.author_count(), std::move(edges)));
}

}  // namespace collabnet

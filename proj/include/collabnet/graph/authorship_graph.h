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

#ifndef COLLABNET_GRAPH_AUTHORSHIP_GRAPH_H_
#define COLLABNET_GRAPH_AUTHORSHIP_GRAPH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "collabnet/graph/graph.h"
#include "collabnet/ingest/records.h"

namespace collabnet {

using AuthorId = uint32_t;
using PublicationId = uint32_t;

// Author identifiers and names. Shared between graphs: a snapshot uses a
// prefix [0, author_count) of the table of the sequence it belongs to.
class NameTable {
 public:
  NameTable() = default;
  explicit NameTable(std::vector<std::string> names);

  // Returns the id of `name`, adding it if new.
  AuthorId Intern(std::string_view name);

  std::optional<AuthorId> Find(std::string_view name) const;
  const std::string& Name(AuthorId id) const { return names_[id]; }
  const std::vector<std::string>& names() const { return names_; }
  uint32_t size() const { return static_cast<uint32_t>(names_.size()); }

 private:
  std::vector<std::string> names_;
  absl::flat_hash_map<std::string, AuthorId> index_;
};

struct PublicationInfo {
  std::string key;
  int year = 0;
  std::string venue;

  friend bool operator==(const PublicationInfo&,
                         const PublicationInfo&) = default;
};

// Bipartite graph of authors and publications. Author ids and publication
// ids are separate dense ranges; the joint node numbering used for
// whole-graph algorithms puts authors first: author a is node a and
// publication p is node author_count() + p.
class BipartiteAuthorshipGraph {
 public:
  BipartiteAuthorshipGraph() = default;

  // `publication_authors[p]` lists the authors of publication p. Fails if a
  // publication has no authors, lists an author twice, or references an id
  // >= author_count (which must not exceed names->size()).
  static absl::StatusOr<BipartiteAuthorshipGraph> Create(
      std::shared_ptr<const NameTable> names, uint32_t author_count,
      std::vector<PublicationInfo> publications,
      std::vector<std::vector<AuthorId>> publication_authors);

  uint32_t author_count() const { return author_count_; }
  uint32_t publication_count() const {
    return static_cast<uint32_t>(publications_.size());
  }
  NodeId node_count() const { return author_count_ + publication_count(); }
  uint64_t edge_count() const { return pub_authors_.size(); }

  // Publications of author a, ascending.
  std::span<const PublicationId> PublicationsOf(AuthorId a) const {
    return {author_pubs_.data() + author_offsets_[a],
            author_pubs_.data() + author_offsets_[a + 1]};
  }
  // Authors of publication p, in record order.
  std::span<const AuthorId> AuthorsOf(PublicationId p) const {
    return {pub_authors_.data() + pub_offsets_[p],
            pub_authors_.data() + pub_offsets_[p + 1]};
  }

  const std::string& AuthorName(AuthorId a) const { return names_->Name(a); }
  std::optional<AuthorId> FindAuthor(std::string_view name) const;
  const PublicationInfo& Publication(PublicationId p) const {
    return publications_[p];
  }
  const std::vector<PublicationInfo>& publications() const {
    return publications_;
  }
  const std::shared_ptr<const NameTable>& name_table() const { return names_; }

  NodeId AuthorNode(AuthorId a) const { return a; }
  NodeId PublicationNode(PublicationId p) const { return author_count_ + p; }
  bool IsAuthorNode(NodeId v) const { return v < author_count_; }

  // Joint author+publication graph.
  Graph ToGraph() const;

 private:
  std::shared_ptr<const NameTable> names_ = std::make_shared<NameTable>();
  uint32_t author_count_ = 0;
  std::vector<PublicationInfo> publications_;
  std::vector<uint64_t> pub_offsets_{0};
  std::vector<AuthorId> pub_authors_;
  std::vector<uint64_t> author_offsets_{0};
  std::vector<PublicationId> author_pubs_;
};

// Simple undirected graph on authors: {a, b} is an edge iff a and b share a
// publication.
class CoauthorshipGraph {
 public:
  CoauthorshipGraph() = default;
  CoauthorshipGraph(std::shared_ptr<const NameTable> names, Graph graph);

  const Graph& graph() const { return graph_; }
  NodeId node_count() const { return graph_.node_count(); }
  uint64_t edge_count() const { return graph_.edge_count(); }
  const std::string& AuthorName(AuthorId a) const { return names_->Name(a); }
  const std::shared_ptr<const NameTable>& name_table() const { return names_; }

 private:
  std::shared_ptr<const NameTable> names_ = std::make_shared<NameTable>();
  Graph graph_;
};

// One publication node per record, one author node per distinct normalized
// name (ids in first-seen order). Fails on an empty record list.
absl::StatusOr<BipartiteAuthorshipGraph> BuildAuthorshipGraph(
    std::span<const PublicationRecord> records);

CoauthorshipGraph ProjectCoauthorship(const BipartiteAuthorshipGraph& g);

}  // namespace collabnet

#endif  // COLLABNET_GRAPH_AUTHORSHIP_GRAPH_H_

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

#include "collabnet/clustering/cluster_io.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include "absl/strings/str_cat.h"
#include "collabnet/util/csv.h"

namespace collabnet {

void WriteClusterAssignment(const BipartiteAuthorshipGraph& g,
                            const Clustering& clustering, std::ostream& out) {
  WriteCsvRow(out, {"node", "cluster", "type"});
  for (AuthorId a = 0; a < g.author_count(); ++a) {
    WriteCsvRow(out, {g.AuthorName(a),
                      absl::StrCat(clustering[g.AuthorNode(a)]), "author"});
  }
  for (PublicationId p = 0; p < g.publication_count(); ++p) {
    WriteCsvRow(
        out, {g.Publication(p).key,
              absl::StrCat(clustering[g.PublicationNode(p)]), "publication"});
  }
}

void WriteClusterAssignment(const CoauthorshipGraph& g,
                            const Clustering& clustering, std::ostream& out) {
  WriteCsvRow(out, {"node", "cluster", "type"});
  for (NodeId v = 0; v < g.node_count(); ++v) {
    WriteCsvRow(out, {g.AuthorName(v), absl::StrCat(clustering[v]), "author"});
  }
}

absl::StatusOr<std::vector<NamedSet>> ReadAuthorClusters(std::istream& in) {
  std::map<uint64_t, std::vector<std::string>> clusters;
  absl::Status s = ReadCsvTable(
      in, {"node", "cluster", "type"},
      [&](const std::vector<std::string>& f, size_t line) -> absl::Status {
        uint64_t id = 0;
        const auto [end, ec] =
            std::from_chars(f[1].data(), f[1].data() + f[1].size(), id);
        if (ec != std::errc() || end != f[1].data() + f[1].size()) {
          return absl::InvalidArgumentError(
              absl::StrCat("line ", line, ": bad cluster id '", f[1], "'"));
        }
        if (f[2] == "author") {
          clusters[id].push_back(f[0]);
        } else if (f[2] != "publication") {
          return absl::InvalidArgumentError(
              absl::StrCat("line ", line, ": bad node type '", f[2], "'"));
        }
        return absl::OkStatus();
      });
  if (!s.ok()) return s;
  std::vector<NamedSet> out;
  for (auto& [id, members] : clusters) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back({absl::StrCat(id), std::move(members)});
  }
  return out;
}

void WriteCover(const CoverSet& cover, std::ostream& out) {
  WriteCsvRow(out, {"set", "author"});
  for (const NamedSet& s : cover.sets) {
    for (const std::string& m : s.members) WriteCsvRow(out, {s.name, m});
  }
}

absl::StatusOr<CoverSet> ReadCover(std::istream& in) {
  std::map<std::string, std::vector<std::string>> sets;
  absl::Status s = ReadCsvTable(
      in, {"set", "author"},
      [&](const std::vector<std::string>& f, size_t line) -> absl::Status {
        if (f[0].empty() || f[1].empty()) {
          return absl::InvalidArgumentError(
              absl::StrCat("line ", line, ": empty field"));
        }
        sets[f[0]].push_back(f[1]);
        return absl::OkStatus();
      });
  if (!s.ok()) return s;
  CoverSet cover;
  for (auto& [name, members] : sets) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    cover.sets.push_back({name, std::move(members)});
  }
  return cover;
}

void WriteOverlapMatrix(const OverlapMatrix& matrix, std::ostream& out) {
  std::vector<std::string> row{"cluster"};
  row.insert(row.end(), matrix.column_names.begin(), matrix.column_names.end());
  WriteCsvRow(out, row);
  for (size_t i = 0; i < matrix.row_names.size(); ++i) {
    row.clear();
    row.push_back(matrix.row_names[i]);
    for (size_t j = 0; j < matrix.column_names.size(); ++j) {
      row.push_back(FormatDouble(matrix.At(i, j)));
    }
    WriteCsvRow(out, row);
  }
}

}  // namespace collabnet

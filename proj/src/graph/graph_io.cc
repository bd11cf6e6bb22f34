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

#include "collabnet/graph/graph_io.h"

#include <charconv>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "collabnet/util/files.h"
#include "collabnet/util/strings.h"

namespace collabnet {
namespace {

constexpr std::string_view kMagic = "collabnet-graph";

std::string_view KindName(GraphFileKind kind) {
  switch (kind) {
    case GraphFileKind::kBipartite:
      return "bipartite";
    case GraphFileKind::kCoauthorship:
      return "coauthorship";
    case GraphFileKind::kSnapshots:
      return "snapshots";
  }
  return "";
}

bool HasLineBreakOrTab(std::string_view s) {
  return s.find_first_of("\t\r\n") != std::string_view::npos;
}

absl::Status CheckWritable(const NameTable& names, uint32_t count) {
  for (AuthorId a = 0; a < count; ++a) {
    if (HasLineBreakOrTab(names.Name(a))) {
      return absl::InvalidArgumentError(absl::StrCat(
          "author name '", names.Name(a), "' contains a tab or line break"));
    }
  }
  return absl::OkStatus();
}

absl::Status WritePublicationSections(const BipartiteAuthorshipGraph& g,
                                      std::ostream& out) {
  out << "publications " << g.publication_count() << '\n';
  for (const PublicationInfo& p : g.publications()) {
    if (HasLineBreakOrTab(p.key) || HasLineBreakOrTab(p.venue)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "publication '", p.key, "' has a tab or line break in a field"));
    }
    out << p.key << '\t' << p.year << '\t' << p.venue << '\n';
  }
  out << "edges " << g.edge_count() << '\n';
  for (PublicationId p = 0; p < g.publication_count(); ++p) {
    for (AuthorId a : g.AuthorsOf(p)) out << a << '\t' << p << '\n';
  }
  return absl::OkStatus();
}

// Sequential reader over the counted sections.
class SectionReader {
 public:
  explicit SectionReader(std::istream& in) : in_(in) {}

  absl::StatusOr<std::string> Line() {
    std::string line;
    if (!std::getline(in_, line)) {
      return absl::InvalidArgumentError(
          absl::StrCat("unexpected end of graph file after line ", line_));
    }
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  absl::Status Header(GraphFileKind kind) {
    auto line = Line();
    if (!line.ok()) return line.status();
    const std::vector<std::string_view> parts = SplitOn(*line, ' ');
    if (parts.size() != 3 || parts[0] != kMagic) {
      return absl::InvalidArgumentError("not a collabnet graph file");
    }
    int version = 0;
    if (!ParseInteger(parts[1], &version) || version != kGraphFormatVersion) {
      return absl::InvalidArgumentError(absl::StrCat(
          "unsupported graph format version '", Absl(parts[1]), "'"));
    }
    if (parts[2] != KindName(kind)) {
      return absl::InvalidArgumentError(
          absl::StrCat("expected a ", Absl(KindName(kind)),
                       " graph file, found '", Absl(parts[2]), "'"));
    }
    return absl::OkStatus();
  }

  // Reads `<label> <n>` and returns n.
  absl::StatusOr<uint64_t> Count(std::string_view label) {
    auto line = Line();
    if (!line.ok()) return line.status();
    const std::vector<std::string_view> parts = SplitOn(*line, ' ');
    uint64_t n = 0;
    if (parts.size() != 2 || parts[0] != label || !ParseInteger(parts[1], &n)) {
      return Error(absl::StrCat("expected '", Absl(label), " <count>'"));
    }
    return n;
  }

  absl::StatusOr<int64_t> IntField(std::string_view text) {
    int64_t v = 0;
    if (!ParseInteger(text, &v)) {
      return Error(absl::StrCat("'", Absl(text), "' is not an integer"));
    }
    return v;
  }

  absl::Status Error(std::string_view message) const {
    return absl::InvalidArgumentError(
        absl::StrCat("graph file line ", line_, ": ", Absl(message)));
  }

 private:
  std::istream& in_;
  uint64_t line_ = 0;
};

absl::StatusOr<std::vector<std::string>> ReadNames(SectionReader& reader) {
  auto n = reader.Count("authors");
  if (!n.ok()) return n.status();
  std::vector<std::string> names;
  names.reserve(*n);
  for (uint64_t i = 0; i < *n; ++i) {
    auto line = reader.Line();
    if (!line.ok()) return line.status();
    names.push_back(*std::move(line));
  }
  return names;
}

absl::StatusOr<BipartiteAuthorshipGraph> ReadPublicationSections(
    SectionReader& reader, std::shared_ptr<const NameTable> names,
    uint32_t author_count) {
  auto pub_count = reader.Count("publications");
  if (!pub_count.ok()) return pub_count.status();
  std::vector<PublicationInfo> pubs;
  pubs.reserve(*pub_count);
  for (uint64_t i = 0; i < *pub_count; ++i) {
    auto line = reader.Line();
    if (!line.ok()) return line.status();
    const std::vector<std::string> parts = absl::StrSplit(*line, '\t');
    if (parts.size() != 3) {
      return reader.Error("publication row needs key, year, venue");
    }
    auto year = reader.IntField(parts[1]);
    if (!year.ok()) return year.status();
    pubs.push_back({parts[0], static_cast<int>(*year), parts[2]});
  }
  auto edge_count = reader.Count("edges");
  if (!edge_count.ok()) return edge_count.status();
  std::vector<std::vector<AuthorId>> authors(pubs.size());
  for (uint64_t i = 0; i < *edge_count; ++i) {
    auto line = reader.Line();
    if (!line.ok()) return line.status();
    const std::vector<std::string_view> parts = SplitOn(*line, '\t');
    if (parts.size() != 2) return reader.Error("edge row needs two ids");
    auto a = reader.IntField(parts[0]);
    if (!a.ok()) return a.status();
    auto p = reader.IntField(parts[1]);
    if (!p.ok()) return p.status();
    if (*p < 0 || static_cast<uint64_t>(*p) >= pubs.size() || *a < 0) {
      return reader.Error("edge references an unknown node");
    }
    authors[*p].push_back(static_cast<AuthorId>(*a));
  }
  return BipartiteAuthorshipGraph::Create(std::move(names), author_count,
                                          std::move(pubs), std::move(authors));
}

}  // namespace

absl::Status WriteAuthorshipGraph(const BipartiteAuthorshipGraph& g,
                                  std::ostream& out) {
  if (auto s = CheckWritable(*g.name_table(), g.author_count()); !s.ok()) {
    return s;
  }
  out << kMagic << ' ' << kGraphFormatVersion << ' '
      << KindName(GraphFileKind::kBipartite) << '\n';
  out << "authors " << g.author_count() << '\n';
  for (AuthorId a = 0; a < g.author_count(); ++a) {
    out << g.AuthorName(a) << '\n';
  }
  return WritePublicationSections(g, out);
}

absl::StatusOr<BipartiteAuthorshipGraph> ReadAuthorshipGraph(std::istream& in) {
  SectionReader reader(in);
  if (auto s = reader.Header(GraphFileKind::kBipartite); !s.ok()) return s;
  auto names = ReadNames(reader);
  if (!names.ok()) return names.status();
  const uint32_t count = static_cast<uint32_t>(names->size());
  return ReadPublicationSections(
      reader, std::make_shared<NameTable>(*std::move(names)), count);
}

absl::Status WriteCoauthorshipGraph(const CoauthorshipGraph& g,
                                    std::ostream& out) {
  if (auto s = CheckWritable(*g.name_table(), g.node_count()); !s.ok()) {
    return s;
  }
  out << kMagic << ' ' << kGraphFormatVersion << ' '
      << KindName(GraphFileKind::kCoauthorship) << '\n';
  out << "authors " << g.node_count() << '\n';
  for (AuthorId a = 0; a < g.node_count(); ++a) out << g.AuthorName(a) << '\n';
  out << "edges " << g.edge_count() << '\n';
  for (const auto& [u, v] : g.graph().Edges()) out << u << '\t' << v << '\n';
  return absl::OkStatus();
}

absl::StatusOr<CoauthorshipGraph> ReadCoauthorshipGraph(std::istream& in) {
  SectionReader reader(in);
  if (auto s = reader.Header(GraphFileKind::kCoauthorship); !s.ok()) return s;
  auto names = ReadNames(reader);
  if (!names.ok()) return names.status();
  auto edge_count = reader.Count("edges");
  if (!edge_count.ok()) return edge_count.status();
  const NodeId n = static_cast<NodeId>(names->size());
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(*edge_count);
  for (uint64_t i = 0; i < *edge_count; ++i) {
    auto line = reader.Line();
    if (!line.ok()) return line.status();
    const std::vector<std::string_view> parts = SplitOn(*line, '\t');
    if (parts.size() != 2) return reader.Error("edge row needs two ids");
    auto u = reader.IntField(parts[0]);
    if (!u.ok()) return u.status();
    auto v = reader.IntField(parts[1]);
    if (!v.ok()) return v.status();
    if (*u < 0 || *v < 0 || *u >= n || *v >= n || *u == *v) {
      return reader.Error("edge references an unknown node or is a loop");
    }
    edges.emplace_back(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
  }
  return CoauthorshipGraph(std::make_shared<NameTable>(*std::move(names)),
                           Graph::FromEdges(n, std::move(edges)));
}

absl::Status WriteSnapshotSequence(const SnapshotSequence& seq,
                                   std::ostream& out) {
  if (auto s = CheckWritable(*seq.names, seq.names->size()); !s.ok()) return s;
  out << kMagic << ' ' << kGraphFormatVersion << ' '
      << KindName(GraphFileKind::kSnapshots) << '\n';
  out << "width " << seq.width << '\n';
  out << "step " << seq.step << '\n';
  out << "authors " << seq.names->size() << '\n';
  for (AuthorId a = 0; a < seq.names->size(); ++a) {
    out << seq.names->Name(a) << '\t' << seq.first_year[a] << '\n';
  }
  out << "snapshots " << seq.snapshots.size() << '\n';
  for (const Snapshot& s : seq.snapshots) {
    out << "snapshot " << s.window_start << ' ' << s.window_end << ' '
        << s.graph.author_count() << '\n';
    if (auto st = WritePublicationSections(s.graph, out); !st.ok()) return st;
  }
  return absl::OkStatus();
}

absl::StatusOr<SnapshotSequence> ReadSnapshotSequence(std::istream& in) {
  SectionReader reader(in);
  if (auto s = reader.Header(GraphFileKind::kSnapshots); !s.ok()) return s;
  SnapshotSequence seq;
  auto width = reader.Count("width");
  if (!width.ok()) return width.status();
  auto step = reader.Count("step");
  if (!step.ok()) return step.status();
  seq.width = static_cast<int>(*width);
  seq.step = static_cast<int>(*step);
  auto n = reader.Count("authors");
  if (!n.ok()) return n.status();
  std::vector<std::string> names;
  names.reserve(*n);
  for (uint64_t i = 0; i < *n; ++i) {
    auto line = reader.Line();
    if (!line.ok()) return line.status();
    const std::vector<std::string> parts = absl::StrSplit(*line, '\t');
    if (parts.size() != 2) return reader.Error("author row needs name, year");
    auto year = reader.IntField(parts[1]);
    if (!year.ok()) return year.status();
    if (!seq.first_year.empty() && *year < seq.first_year.back()) {
      return reader.Error("author first years must be nondecreasing");
    }
    names.push_back(parts[0]);
    seq.first_year.push_back(static_cast<int>(*year));
  }
  auto table = std::make_shared<NameTable>(std::move(names));
  seq.names = table;
  auto k = reader.Count("snapshots");
  if (!k.ok()) return k.status();
  for (uint64_t i = 0; i < *k; ++i) {
    auto line = reader.Line();
    if (!line.ok()) return line.status();
    const std::vector<std::string_view> parts = SplitOn(*line, ' ');
    if (parts.size() != 4 || parts[0] != "snapshot") {
      return reader.Error("expected 'snapshot <start> <end> <authors>'");
    }
    auto start = reader.IntField(parts[1]);
    if (!start.ok()) return start.status();
    auto end = reader.IntField(parts[2]);
    if (!end.ok()) return end.status();
    auto count = reader.IntField(parts[3]);
    if (!count.ok()) return count.status();
    if (*count < 0 || static_cast<uint64_t>(*count) > table->size()) {
      return reader.Error("snapshot author count exceeds the author table");
    }
    auto graph =
        ReadPublicationSections(reader, table, static_cast<uint32_t>(*count));
    if (!graph.ok()) return graph.status();
    seq.snapshots.push_back(
        {static_cast<int>(*start), static_cast<int>(*end), *std::move(graph)});
  }
  return seq;
}

absl::StatusOr<GraphFileKind> PeekGraphKind(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  std::string line;
  std::getline(*in, line);
  for (GraphFileKind kind :
       {GraphFileKind::kBipartite, GraphFileKind::kCoauthorship,
        GraphFileKind::kSnapshots}) {
    if (line == absl::StrCat(Absl(kMagic), " ", kGraphFormatVersion, " ",
                             Absl(KindName(kind)))) {
      return kind;
    }
  }
  return absl::InvalidArgumentError(
      absl::StrCat("'", path.string(), "' is not a collabnet graph file"));
}

absl::StatusOr<BipartiteAuthorshipGraph> LoadAuthorshipGraph(
    const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  return ReadAuthorshipGraph(*in);
}

absl::StatusOr<SnapshotSequence> LoadSnapshotSequence(
    const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  return ReadSnapshotSequence(*in);
}

absl::StatusOr<CoauthorshipGraph> LoadCoauthorshipGraph(
    const std::filesystem::path& path) {
  auto kind = PeekGraphKind(path);
  if (!kind.ok()) return kind.status();
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  if (*kind == GraphFileKind::kBipartite) {
    auto g = ReadAuthorshipGraph(*in);
    if (!g.ok()) return g.status();
    return ProjectCoauthorship(*g);
  }
  return ReadCoauthorshipGraph(*in);
}

}  // namespace collabnet

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

#include "collabnet/ingest/name_alignment.h"

#include <set>

#include "absl/container/flat_hash_map.h"
#include "collabnet/ingest/name_normalization.h"
#include "collabnet/util/csv.h"

namespace collabnet {

NameAlignment AlignNames(std::span<const std::string> author_names,
                         std::span<const std::string> invitee_names) {
  absl::flat_hash_map<std::string, uint32_t> index;
  index.reserve(author_names.size());
  for (uint32_t i = 0; i < author_names.size(); ++i) {
    index.try_emplace(NormalizeName(author_names[i]), i);
  }

  std::set<std::string> invitees;
  for (const std::string& name : invitee_names) {
    std::string normalized = NormalizeName(name);
    if (!normalized.empty()) invitees.insert(std::move(normalized));
  }

  NameAlignment alignment;
  for (const std::string& name : invitees) {
    if (auto it = index.find(name); it != index.end()) {
      alignment.matched.emplace(name, it->second);
    } else {
      alignment.unmatched.push_back(name);
    }
  }
  if (!invitees.empty()) {
    alignment.match_fraction = static_cast<double>(alignment.matched.size()) /
                               static_cast<double>(invitees.size());
  }
  return alignment;
}

void WriteAlignmentCsv(const NameAlignment& alignment, std::ostream& out) {
  out << "invitee,author_index\n";
  std::map<std::string, std::string> rows;
  for (const auto& [name, id] : alignment.matched) {
    rows.emplace(name, std::to_string(id));
  }
  for (const std::string& name : alignment.unmatched) {
    rows.emplace(name, std::string(kNaToken));
  }
  for (const auto& [name, value] : rows) WriteCsvRow(out, {name, value});
}

}  // namespace collabnet

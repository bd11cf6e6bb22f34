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

#ifndef COLLABNET_INGEST_NAME_ALIGNMENT_H_
#define COLLABNET_INGEST_NAME_ALIGNMENT_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace collabnet {

struct NameAlignment {
  // Normalized invitee name -> index into the author list it was found in.
  std::map<std::string, uint32_t> matched;
  // Distinct normalized invitee names without a matching author, sorted.
  std::vector<std::string> unmatched;
  // matched.size() / distinct invitees; 0 when there are no invitees.
  double match_fraction = 0.0;
};

// Exact match on normalized names. `author_names` index positions become
// the author identifiers; a name that occurs more than once maps to its
// first position.
NameAlignment AlignNames(std::span<const std::string> author_names,
                         std::span<const std::string> invitee_names);

// CSV with header `invitee,author_index` (NA for unmatched invitees).
void WriteAlignmentCsv(const NameAlignment& alignment, std::ostream& out);

}  // namespace collabnet

#endif  // COLLABNET_INGEST_NAME_ALIGNMENT_H_

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

#ifndef COLLABNET_INGEST_RECORDS_H_
#define COLLABNET_INGEST_RECORDS_H_

#include <cstdint>
#include <string>
#include <vector>

namespace collabnet {

inline constexpr int kMinPlausibleYear = 1900;
inline constexpr int kMaxPlausibleYear = 2100;

// One paper. Author names are normalized and unique within the record.
struct PublicationRecord {
  std::string pub_key;
  std::string title;
  int year = 0;
  std::string venue_key;  // May be empty.
  std::vector<std::string> authors;

  friend bool operator==(const PublicationRecord&,
                         const PublicationRecord&) = default;
};

// One invitation to a seminar.
struct SeminarRecord {
  std::string seminar_id;
  int seminar_year = 0;
  std::string invitee_name;
  bool attended = false;

  friend bool operator==(const SeminarRecord&, const SeminarRecord&) = default;
};

enum class DiagnosticSeverity { kNote, kSkipped };

// One message about a single input record. `location` is a 1-based line
// number for line formats and a 1-based record ordinal for XML.
struct ParseDiagnostic {
  uint64_t location = 0;
  std::string record_key;
  DiagnosticSeverity severity = DiagnosticSeverity::kSkipped;
  std::string message;
};

template <typename Record>
struct ParseResult {
  std::vector<Record> records;
  std::vector<ParseDiagnostic> diagnostics;
  uint64_t malformed_count = 0;
};

using PublicationParseResult = ParseResult<PublicationRecord>;
using SeminarParseResult = ParseResult<SeminarRecord>;

}  // namespace collabnet

#endif  // COLLABNET_INGEST_RECORDS_H_

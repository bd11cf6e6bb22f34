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

#ifndef COLLABNET_INGEST_PUBLICATION_PARSER_H_
#define COLLABNET_INGEST_PUBLICATION_PARSER_H_

#include <istream>
#include <ostream>
#include <span>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "collabnet/ingest/records.h"

namespace collabnet {

enum class PublicationFormat {
  // Root element with <article>/<inproceedings> children carrying key=,
  // <title>, <year>, optional <booktitle> and one or more <author>.
  kXml,
  // pub_key<TAB>year<TAB>venue_key<TAB>author1|author2|...
  kTsv,
};

absl::StatusOr<PublicationFormat> ParsePublicationFormat(std::string_view flag);

// Reads every record from `in`. Well-formed records come back in input
// order with authors normalized and deduplicated; malformed records are
// skipped with a diagnostic.
//
// Fails with DataLoss when the stream cannot be read, and with
// InvalidArgument when the XML is not well-formed or when more than half of
// the records are malformed (usually the wrong format flag).
absl::StatusOr<PublicationParseResult> ParsePublications(
    std::istream& in, PublicationFormat format);

// Serializes records in the tabular format. Fails if a field contains a
// character that the format cannot represent (tab, line break, or `|` in an
// author name).
absl::Status WritePublicationsTsv(std::span<const PublicationRecord> records,
                                  std::ostream& out);

}  // namespace collabnet

#endif  // COLLABNET_INGEST_PUBLICATION_PARSER_H_

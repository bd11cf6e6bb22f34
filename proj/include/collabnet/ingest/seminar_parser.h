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

#ifndef COLLABNET_INGEST_SEMINAR_PARSER_H_
#define COLLABNET_INGEST_SEMINAR_PARSER_H_

#include <istream>
#include <ostream>
#include <span>

#include "absl/status/statusor.h"
#include "collabnet/ingest/records.h"

namespace collabnet {

// Parses `seminar_id,year,invitee,attended` CSV (header required, attended
// in {0,1}). Invitee names are normalized; a repeated (seminar_id, invitee)
// pair is skipped with a diagnostic, as is a row whose year disagrees with
// earlier rows of the same seminar.
absl::StatusOr<SeminarParseResult> ParseSeminars(std::istream& in);

void WriteSeminarsCsv(std::span<const SeminarRecord> records,
                      std::ostream& out);

}  // namespace collabnet

#endif  // COLLABNET_INGEST_SEMINAR_PARSER_H_

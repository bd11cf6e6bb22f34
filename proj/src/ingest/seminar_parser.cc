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

#include "collabnet/ingest/seminar_parser.h"

#include <charconv>
#include <string>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"
#include "collabnet/ingest/name_normalization.h"
#include "collabnet/util/csv.h"
#include "collabnet/util/strings.h"

namespace collabnet {

namespace {

constexpr std::string_view kHeader = "seminar_id,year,invitee,attended";

}  // namespace

absl::StatusOr<SeminarParseResult> ParseSeminars(std::istream& in) {
  SeminarParseResult result;
  std::string line;
  uint64_t line_number = 0;
  bool header_seen = false;
  absl::flat_hash_set<std::pair<std::string, std::string>> seen_pairs;
  absl::flat_hash_map<std::string, int> seminar_years;

  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view view = StripLineEnding(line, line_number == 1);
    if (StripWhitespace(view).empty()) continue;
    if (!header_seen) {
      if (StripWhitespace(view) != kHeader) {
        return absl::InvalidArgumentError(absl::StrCat(
            "seminar file must start with header '", Absl(kHeader), "'"));
      }
      header_seen = true;
      continue;
    }
    auto skip = [&](std::string key, std::string message) {
      result.diagnostics.push_back({line_number, std::move(key),
                                    DiagnosticSeverity::kSkipped,
                                    std::move(message)});
      ++result.malformed_count;
    };
    auto fields = SplitCsvLine(view);
    if (!fields.ok()) {
      skip("", std::string(fields.status().message()));
      continue;
    }
    if (fields->size() != 4) {
      skip("", absl::StrCat("expected 4 fields, found ", fields->size()));
      continue;
    }
    SeminarRecord record;
    record.seminar_id = std::string(StripWhitespace((*fields)[0]));
    if (record.seminar_id.empty()) {
      skip("", "empty seminar_id");
      continue;
    }
    const std::string_view year_text = StripWhitespace((*fields)[1]);
    const auto [ptr, ec] =
        std::from_chars(year_text.data(), year_text.data() + year_text.size(),
                        record.seminar_year);
    if (ec != std::errc() || ptr != year_text.data() + year_text.size() ||
        record.seminar_year < kMinPlausibleYear ||
        record.seminar_year > kMaxPlausibleYear) {
      skip(record.seminar_id,
           absl::StrCat("invalid year '", Absl(year_text), "'"));
      continue;
    }
    record.invitee_name = NormalizeName((*fields)[2]);
    if (record.invitee_name.empty()) {
      skip(record.seminar_id, "empty invitee name");
      continue;
    }
    const std::string_view attended = StripWhitespace((*fields)[3]);
    if (attended != "0" && attended != "1") {
      skip(record.seminar_id, absl::StrCat("attended must be 0 or 1, found '",
                                           Absl(attended), "'"));
      continue;
    }
    record.attended = attended == "1";

    auto [year_it, inserted] =
        seminar_years.try_emplace(record.seminar_id, record.seminar_year);
    if (!inserted && year_it->second != record.seminar_year) {
      skip(record.seminar_id,
           absl::StrCat("year ", record.seminar_year,
                        " conflicts with earlier year ", year_it->second));
      continue;
    }
    if (!seen_pairs.emplace(record.seminar_id, record.invitee_name).second) {
      skip(record.seminar_id,
           absl::StrCat("duplicate invitee '", record.invitee_name, "'"));
      continue;
    }
    result.records.push_back(std::move(record));
  }
  if (in.bad()) return absl::DataLossError("error reading seminar stream");
  const uint64_t total = result.records.size() + result.malformed_count;
  if (total > 0 && 2 * result.malformed_count > total) {
    return absl::InvalidArgumentError(absl::StrCat(
        result.malformed_count, " of ", total, " seminar rows are malformed"));
  }
  return result;
}

void WriteSeminarsCsv(std::span<const SeminarRecord> records,
                      std::ostream& out) {
  out << kHeader << '\n';
  for (const SeminarRecord& r : records) {
    WriteCsvRow(out, {r.seminar_id, std::to_string(r.seminar_year),
                      r.invitee_name, r.attended ? "1" : "0"});
  }
}

}  // namespace collabnet

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

#ifndef COLLABNET_UTIL_CSV_H_
#define COLLABNET_UTIL_CSV_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace collabnet {

// Token written for undefined values in every tabular output.
inline constexpr std::string_view kNaToken = "NA";

// Quotes a field with `"` when it contains a separator, quote or line break.
std::string CsvField(std::string_view value);

// Shortest round-trip decimal representation of a double.
std::string FormatDouble(double value);
std::string FormatOptional(const std::optional<double>& value);

// Splits one CSV line (RFC 4180 quoting, no embedded line breaks).
absl::StatusOr<std::vector<std::string>> SplitCsvLine(std::string_view line);

// Writes fields joined by `,`, each passed through CsvField, plus '\n'.
void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields);

// Strips a trailing '\r' (CRLF input) and a leading UTF-8 byte order mark.
std::string_view StripLineEnding(std::string_view line, bool first_line);

// Reads a CSV whose first non-empty line must equal `header`, calling
// row(fields, line_number) for every later non-empty line. Rows with the
// wrong field count and errors returned by `row` stop the read.
template <typename RowFn>
absl::Status ReadCsvTable(std::istream& in,
                          const std::vector<std::string>& header, RowFn&& row) {
  std::string line;
  size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = StripLineEnding(line, line_no == 1);
    if (text.empty()) continue;
    auto fields = SplitCsvLine(text);
    if (!fields.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", fields.status().message()));
    }
    if (!seen_header) {
      if (*fields != header) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line_no, ": expected header '",
                         absl::StrJoin(header, ","), "'"));
      }
      seen_header = true;
      continue;
    }
    if (fields->size() != header.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": expected ", header.size(), " fields"));
    }
    if (absl::Status s = row(*fields, line_no); !s.ok()) return s;
  }
  if (!seen_header) return absl::InvalidArgumentError("missing header");
  return absl::OkStatus();
}

}  // namespace collabnet

#endif  // COLLABNET_UTIL_CSV_H_

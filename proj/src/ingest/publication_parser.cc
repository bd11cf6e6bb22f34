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

#include "collabnet/ingest/publication_parser.h"

#include <expat.h>

#include <array>
#include <charconv>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "collabnet/ingest/name_normalization.h"
#include "collabnet/util/csv.h"
#include "collabnet/util/strings.h"

namespace collabnet {
namespace {

constexpr size_t kReadChunk = 1 << 16;

// Fields of one record as read from the input, before validation.
struct RawPublication {
  uint64_t location = 0;
  std::optional<std::string> key;
  std::string title;
  std::vector<std::string> years;
  std::string venue;
  std::vector<std::string> authors;
};

std::optional<int> ParseYear(std::string_view text) {
  text = StripWhitespace(text);
  int year = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), year);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return year;
}

// Validates one raw record and appends either the record or a diagnostic.
class RecordSink {
 public:
  explicit RecordSink(PublicationParseResult& result) : result_(result) {}

  void Accept(RawPublication raw) {
    const std::string key = raw.key.has_value()
                                ? std::string(StripWhitespace(*raw.key))
                                : std::string();
    auto skip = [&](std::string message) {
      result_.diagnostics.push_back({raw.location, key,
                                     DiagnosticSeverity::kSkipped,
                                     std::move(message)});
      ++result_.malformed_count;
    };
    if (key.empty()) return skip("record has no key");
    if (raw.years.empty()) return skip("record has no year");
    if (raw.years.size() > 1) return skip("record has more than one year");
    const std::optional<int> year = ParseYear(raw.years.front());
    if (!year.has_value()) {
      return skip(
          absl::StrCat("year '", raw.years.front(), "' is not an integer"));
    }
    if (*year < kMinPlausibleYear || *year > kMaxPlausibleYear) {
      return skip(absl::StrCat("year ", *year, " outside [", kMinPlausibleYear,
                               ", ", kMaxPlausibleYear, "]"));
    }

    PublicationRecord record;
    absl::flat_hash_set<std::string> seen;
    for (const std::string& raw_name : raw.authors) {
      std::string name = NormalizeName(raw_name);
      if (name.empty()) continue;
      if (!seen.insert(name).second) {
        result_.diagnostics.push_back(
            {raw.location, key, DiagnosticSeverity::kNote,
             absl::StrCat("duplicate author '", name, "' removed")});
        continue;
      }
      record.authors.push_back(std::move(name));
    }
    if (record.authors.empty()) return skip("record has no author");
    if (!keys_.insert(key).second) return skip("duplicate record key");

    record.pub_key = key;
    record.title = NormalizeName(raw.title);
    record.year = *year;
    record.venue_key = NormalizeName(raw.venue);
    result_.records.push_back(std::move(record));
  }

 private:
  PublicationParseResult& result_;
  absl::flat_hash_set<std::string> keys_;
};

absl::Status CheckMalformedRatio(const PublicationParseResult& result) {
  const uint64_t total = result.records.size() + result.malformed_count;
  if (total > 0 && 2 * result.malformed_count > total) {
    return absl::InvalidArgumentError(
        absl::StrCat(result.malformed_count, " of ", total,
                     " records are malformed; check the --format flag"));
  }
  return absl::OkStatus();
}

// ISO 8859-1 named entities (U+00A0..U+00FF), which DBLP exports declare
// in their DTD.
constexpr std::array<const char*, 96> kLatin1Entities = {
    "nbsp",   "iexcl",  "cent",   "pound",  "curren", "yen",    "brvbar",
    "sect",   "uml",    "copy",   "ordf",   "laquo",  "not",    "shy",
    "reg",    "macr",   "deg",    "plusmn", "sup2",   "sup3",   "acute",
    "micro",  "para",   "middot", "cedil",  "sup1",   "ordm",   "raquo",
    "frac14", "frac12", "frac34", "iquest", "Agrave", "Aacute", "Acirc",
    "Atilde", "Auml",   "Aring",  "AElig",  "Ccedil", "Egrave", "Eacute",
    "Ecirc",  "Euml",   "Igrave", "Iacute", "Icirc",  "Iuml",   "ETH",
    "Ntilde", "Ograve", "Oacute", "Ocirc",  "Otilde", "Ouml",   "times",
    "Oslash", "Ugrave", "Uacute", "Ucirc",  "Uuml",   "Yacute", "THORN",
    "szlig",  "agrave", "aacute", "acirc",  "atilde", "auml",   "aring",
    "aelig",  "ccedil", "egrave", "eacute", "ecirc",  "euml",   "igrave",
    "iacute", "icirc",  "iuml",   "eth",    "ntilde", "ograve", "oacute",
    "ocirc",  "otilde", "ouml",   "divide", "oslash", "ugrave", "uacute",
    "ucirc",  "uuml",   "yacute", "thorn",  "yuml"};

std::optional<std::string> Latin1Entity(const char* name) {
  for (size_t i = 0; i < kLatin1Entities.size(); ++i) {
    if (std::strcmp(name, kLatin1Entities[i]) == 0) {
      const unsigned cp = 0xA0 + static_cast<unsigned>(i);
      return std::string{static_cast<char>(0xC0 | (cp >> 6)),
                         static_cast<char>(0x80 | (cp & 0x3F))};
    }
  }
  return std::nullopt;
}

enum class Field { kNone, kTitle, kYear, kBooktitle, kAuthor };

// SAX state for the XML subset. Memory is bounded by the largest record.
class XmlPublicationReader {
 public:
  explicit XmlPublicationReader(PublicationParseResult& result)
      : sink_(result), result_(result) {}

  static void OnStart(void* self, const XML_Char* name,
                      const XML_Char** attrs) {
    static_cast<XmlPublicationReader*>(self)->Start(name, attrs);
  }
  static void OnEnd(void* self, const XML_Char* name) {
    static_cast<XmlPublicationReader*>(self)->End(name);
  }
  static void OnText(void* self, const XML_Char* text, int len) {
    static_cast<XmlPublicationReader*>(self)->Text(std::string_view(text, len));
  }
  static void OnSkippedEntity(void* self, const XML_Char* name,
                              int is_parameter_entity) {
    if (is_parameter_entity) return;
    static_cast<XmlPublicationReader*>(self)->SkippedEntity(name);
  }
  static int OnExternalEntity(XML_Parser, const XML_Char*, const XML_Char*,
                              const XML_Char*, const XML_Char*) {
    // The external DTD is not loaded; unknown entities reach OnSkippedEntity.
    return XML_STATUS_OK;
  }

 private:
  void Start(std::string_view name, const XML_Char** attrs) {
    ++depth_;
    if (depth_ == 2) {
      in_record_ = name == "article" || name == "inproceedings";
      if (!in_record_) return;
      current_ = RawPublication{};
      current_.location = ++ordinal_;
      for (size_t i = 0; attrs[i] != nullptr; i += 2) {
        if (std::string_view(attrs[i]) == "key") current_.key = attrs[i + 1];
      }
      return;
    }
    if (depth_ == 3 && in_record_) {
      field_ = name == "title"       ? Field::kTitle
               : name == "year"      ? Field::kYear
               : name == "booktitle" ? Field::kBooktitle
               : name == "author"    ? Field::kAuthor
                                     : Field::kNone;
      text_.clear();
    }
  }

  void End(std::string_view) {
    if (depth_ == 3 && in_record_ && field_ != Field::kNone) {
      switch (field_) {
        case Field::kTitle:
          current_.title = text_;
          break;
        case Field::kYear:
          current_.years.push_back(text_);
          break;
        case Field::kBooktitle:
          current_.venue = text_;
          break;
        case Field::kAuthor:
          current_.authors.push_back(text_);
          break;
        case Field::kNone:
          break;
      }
      field_ = Field::kNone;
    } else if (depth_ == 2 && in_record_) {
      sink_.Accept(std::move(current_));
      in_record_ = false;
    }
    --depth_;
  }

  void Text(std::string_view text) {
    if (in_record_ && field_ != Field::kNone) text_.append(text);
  }

  void SkippedEntity(const char* name) {
    if (auto replacement = Latin1Entity(name)) {
      Text(*replacement);
      return;
    }
    if (in_record_) {
      result_.diagnostics.push_back(
          {ordinal_, current_.key.value_or(""), DiagnosticSeverity::kNote,
           absl::StrCat("unknown entity '&", name, ";' dropped")});
    }
  }

  RecordSink sink_;
  PublicationParseResult& result_;
  int depth_ = 0;
  bool in_record_ = false;
  Field field_ = Field::kNone;
  uint64_t ordinal_ = 0;
  RawPublication current_;
  std::string text_;
};

struct ParserDeleter {
  void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

absl::StatusOr<PublicationParseResult> ParseXml(std::istream& in) {
  PublicationParseResult result;
  XmlPublicationReader reader(result);
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(
      XML_ParserCreate(nullptr));
  XML_Parser p = parser.get();
  XML_SetUserData(p, &reader);
  XML_SetElementHandler(p, &XmlPublicationReader::OnStart,
                        &XmlPublicationReader::OnEnd);
  XML_SetCharacterDataHandler(p, &XmlPublicationReader::OnText);
  XML_SetSkippedEntityHandler(p, &XmlPublicationReader::OnSkippedEntity);
  XML_SetExternalEntityRefHandler(p, &XmlPublicationReader::OnExternalEntity);
  XML_SetParamEntityParsing(p, XML_PARAM_ENTITY_PARSING_UNLESS_STANDALONE);
  XML_UseForeignDTD(p, XML_TRUE);

  std::vector<char> buf(kReadChunk);
  bool saw_content = false;
  while (true) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const std::streamsize got = in.gcount();
    if (in.bad())
      return absl::DataLossError("error reading publication stream");
    if (!saw_content) {
      for (std::streamsize i = 0; i < got; ++i) {
        const char c = buf[i];
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
          saw_content = true;
          break;
        }
      }
    }
    const bool final = !in;
    if (!saw_content) {
      if (final) return result;
      continue;
    }
    if (XML_Parse(p, buf.data(), static_cast<int>(got), final) ==
        XML_STATUS_ERROR) {
      return absl::InvalidArgumentError(
          absl::StrCat("XML error at line ", XML_GetCurrentLineNumber(p),
                       ", column ", XML_GetCurrentColumnNumber(p), ": ",
                       XML_ErrorString(XML_GetErrorCode(p))));
    }
    if (final) break;
  }
  if (auto status = CheckMalformedRatio(result); !status.ok()) return status;
  return result;
}

absl::StatusOr<PublicationParseResult> ParseTsv(std::istream& in) {
  PublicationParseResult result;
  RecordSink sink(result);
  std::string line;
  uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view view = StripLineEnding(line, line_number == 1);
    if (StripWhitespace(view).empty()) continue;
    std::vector<std::string_view> fields = SplitOn(view, '\t');
    if (fields.size() != 4) {
      result.diagnostics.push_back(
          {line_number, fields.empty() ? "" : std::string(fields[0]),
           DiagnosticSeverity::kSkipped,
           absl::StrCat("expected 4 tab-separated fields, found ",
                        fields.size())});
      ++result.malformed_count;
      continue;
    }
    RawPublication raw;
    raw.location = line_number;
    raw.key = std::string(fields[0]);
    raw.years.emplace_back(fields[1]);
    raw.venue = std::string(fields[2]);
    for (std::string_view name : SplitOn(fields[3], '|')) {
      raw.authors.emplace_back(name);
    }
    sink.Accept(std::move(raw));
  }
  if (in.bad()) return absl::DataLossError("error reading publication stream");
  if (auto status = CheckMalformedRatio(result); !status.ok()) return status;
  return result;
}

}  // namespace

absl::StatusOr<PublicationFormat> ParsePublicationFormat(
    std::string_view flag) {
  if (flag == "xml") return PublicationFormat::kXml;
  if (flag == "tsv") return PublicationFormat::kTsv;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown publication format '", Absl(flag), "' (expected xml or tsv)"));
}

absl::StatusOr<PublicationParseResult> ParsePublications(
    std::istream& in, PublicationFormat format) {
  if (!in.good() && !in.eof()) {
    return absl::DataLossError("publication stream is not readable");
  }
  switch (format) {
    case PublicationFormat::kXml:
      return ParseXml(in);
    case PublicationFormat::kTsv:
      return ParseTsv(in);
  }
  return absl::InvalidArgumentError("unknown publication format");
}

absl::Status WritePublicationsTsv(std::span<const PublicationRecord> records,
                                  std::ostream& out) {
  auto bad = [](std::string_view s, std::string_view forbidden) {
    return s.find_first_of(forbidden) != std::string_view::npos;
  };
  for (const PublicationRecord& r : records) {
    if (bad(r.pub_key, "\t\r\n") || bad(r.venue_key, "\t\r\n")) {
      return absl::InvalidArgumentError(absl::StrCat(
          "record '", r.pub_key, "' has a key or venue with a tab or newline"));
    }
    for (const std::string& a : r.authors) {
      if (bad(a, "\t\r\n|")) {
        return absl::InvalidArgumentError(
            absl::StrCat("record '", r.pub_key, "' has author '", a,
                         "' that cannot be written in the tabular format"));
      }
    }
  }
  for (const PublicationRecord& r : records) {
    out << r.pub_key << '\t' << r.year << '\t' << r.venue_key << '\t';
    for (size_t i = 0; i < r.authors.size(); ++i) {
      if (i > 0) out << '|';
      out << r.authors[i];
    }
    out << '\n';
  }
  return absl::OkStatus();
}

}  // namespace collabnet

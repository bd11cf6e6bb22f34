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

#include "collabnet/pipeline/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <set>
#include <variant>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "collabnet/clustering/overlap.h"
#include "collabnet/dynamics/measures.h"
#include "collabnet/ingest/publication_parser.h"
#include "collabnet/util/csv.h"
#include "collabnet/util/files.h"
#include "collabnet/util/strings.h"

namespace collabnet {
namespace {

using Member =
    std::variant<std::string RunConfig::*,
                 std::vector<std::string> RunConfig::*, int RunConfig::*,
                 uint32_t RunConfig::*, uint64_t RunConfig::*,
                 double RunConfig::*, bool RunConfig::*>;

struct Field {
  std::string_view key;
  Member member;
};

// Serialization order.
const Field kFields[] = {
    {"publications", &RunConfig::publications},
    {"publication_format", &RunConfig::publication_format},
    {"seminars", &RunConfig::seminars},
    {"output_dir", &RunConfig::output_dir},
    {"stages", &RunConfig::stages},
    {"threads", &RunConfig::threads},
    {"window", &RunConfig::window},
    {"step", &RunConfig::step},
    {"min_venue_authors", &RunConfig::min_venue_authors},
    {"powerlaw_xmin", &RunConfig::powerlaw_xmin},
    {"powerlaw_method", &RunConfig::powerlaw_method},
    {"distance_samples", &RunConfig::distance_samples},
    {"distance_seed", &RunConfig::distance_seed},
    {"centrality_tolerance", &RunConfig::centrality_tolerance},
    {"centrality_max_iterations", &RunConfig::centrality_max_iterations},
    {"centrality_top", &RunConfig::centrality_top},
    {"cluster_seed", &RunConfig::cluster_seed},
    {"refine", &RunConfig::refine},
    {"compare_measures", &RunConfig::compare_measures},
    {"compare_top", &RunConfig::compare_top},
    {"compare_baseline", &RunConfig::compare_baseline},
    {"baseline_seed", &RunConfig::baseline_seed},
    {"random_cohorts", &RunConfig::random_cohorts},
    {"connected_cohorts", &RunConfig::connected_cohorts},
    {"cohort_seed", &RunConfig::cohort_seed},
    {"min_absentees", &RunConfig::min_absentees},
    {"career_split_year", &RunConfig::career_split_year},
    {"measures", &RunConfig::measures},
    {"launcher_threshold", &RunConfig::launcher_threshold},
};

template <typename T>
absl::Status ParseNumber(std::string_view text, T* out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, *out);
  if (ec != std::errc() || ptr != end) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", Absl(text), "' is not a valid number"));
  }
  return absl::OkStatus();
}

absl::Status Assign(RunConfig& config, const Member& member,
                    std::string_view value) {
  return std::visit(
      [&](auto ptr) -> absl::Status {
        using T = std::remove_reference_t<decltype(config.*ptr)>;
        T& target = config.*ptr;
        if constexpr (std::is_same_v<T, std::string>) {
          target = std::string(value);
          return absl::OkStatus();
        } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
          target.clear();
          if (value.empty()) return absl::OkStatus();
          for (std::string_view part : SplitOn(value, ',')) {
            part = StripWhitespace(part);
            if (part.empty()) {
              return absl::InvalidArgumentError("empty list element");
            }
            target.emplace_back(part);
          }
          return absl::OkStatus();
        } else if constexpr (std::is_same_v<T, bool>) {
          if (value == "true") {
            target = true;
          } else if (value == "false") {
            target = false;
          } else {
            return absl::InvalidArgumentError(absl::StrCat(
                "'", Absl(value), "' is not a boolean (true|false)"));
          }
          return absl::OkStatus();
        } else if constexpr (std::is_same_v<T, double>) {
          if (auto s = ParseNumber(value, &target); !s.ok()) return s;
          if (!std::isfinite(target)) {
            return absl::InvalidArgumentError("value must be finite");
          }
          return absl::OkStatus();
        } else {
          return ParseNumber(value, &target);
        }
      },
      member);
}

std::string Render(const RunConfig& config, const Member& member) {
  return std::visit(
      [&](auto ptr) -> std::string {
        using T = std::remove_cvref_t<decltype(config.*ptr)>;
        const T& v = config.*ptr;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
          return absl::StrJoin(v, ",");
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return FormatDouble(v);
        } else {
          return absl::StrCat(v);
        }
      },
      member);
}

absl::Status Range(bool ok, std::string_view key, std::string_view rule) {
  if (ok) return absl::OkStatus();
  return absl::InvalidArgumentError(
      absl::StrCat("config: ", Absl(key), " ", Absl(rule)));
}

bool Exists(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

}  // namespace

bool RunConfig::StageEnabled(std::string_view stage) const {
  return std::find(stages.begin(), stages.end(), stage) != stages.end();
}

absl::StatusOr<RunConfig> ParseRunConfig(std::string_view text) {
  RunConfig config;
  std::set<std::string_view> seen;
  size_t line_no = 0;
  for (std::string_view raw : SplitOn(text, '\n')) {
    ++line_no;
    const std::string_view line =
        StripWhitespace(StripLineEnding(raw, line_no == 1));
    if (line.empty() || line.front() == '#') continue;
    const size_t eq = line.find('=');
    auto error = [&](std::string_view what) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_no, ": ", Absl(what)));
    };
    if (eq == std::string_view::npos) return error("expected 'key = value'");
    const std::string_view key = StripWhitespace(line.substr(0, eq));
    const std::string_view value = StripWhitespace(line.substr(eq + 1));
    const auto field =
        std::find_if(std::begin(kFields), std::end(kFields),
                     [&](const Field& f) { return f.key == key; });
    if (field == std::end(kFields)) {
      return error(absl::StrCat("unknown key '", Absl(key), "'"));
    }
    if (!seen.insert(field->key).second) {
      return error(absl::StrCat("key '", Absl(key), "' given twice"));
    }
    if (auto s = Assign(config, field->member, value); !s.ok()) {
      return error(absl::StrCat(Absl(key), ": ", s.message()));
    }
  }
  return config;
}

absl::StatusOr<RunConfig> LoadRunConfig(const std::string& path) {
  auto text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  return ParseRunConfig(*text);
}

std::string SerializeRunConfig(const RunConfig& config) {
  std::string out;
  for (const Field& f : kFields) {
    absl::StrAppend(&out, Absl(f.key), " = ", Render(config, f.member), "\n");
  }
  return out;
}

std::string RunConfigHash(const RunConfig& config) {
  return Sha256Hex(SerializeRunConfig(config));
}

absl::Status ValidateRunConfig(const RunConfig& config) {
  std::vector<absl::Status> checks = {
      Range(!config.output_dir.empty(), "output_dir", "must be set"),
      Range(config.threads >= 1, "threads", "must be >= 1"),
      Range(config.window >= 1, "window", "must be >= 1"),
      Range(config.step >= 1, "step", "must be >= 1"),
      Range(config.powerlaw_xmin >= 1, "powerlaw_xmin", "must be >= 1"),
      Range(config.powerlaw_method == "exact" ||
                config.powerlaw_method == "continuous",
            "powerlaw_method", "must be exact or continuous"),
      Range(config.distance_samples >= 1, "distance_samples", "must be >= 1"),
      Range(config.centrality_tolerance > 0.0, "centrality_tolerance",
            "must be > 0"),
      Range(config.centrality_max_iterations >= 1, "centrality_max_iterations",
            "must be >= 1"),
      Range(config.compare_top >= 1, "compare_top", "must be >= 1"),
      Range(!config.compare_measures.empty(), "compare_measures",
            "must not be empty"),
      Range(!config.measures.empty(), "measures", "must not be empty"),
      Range(config.launcher_threshold >= 0.0, "launcher_threshold",
            "must be >= 0"),
  };
  for (const absl::Status& s : checks) {
    if (!s.ok()) return s;
  }
  if (auto f = ParsePublicationFormat(config.publication_format); !f.ok()) {
    return f.status();
  }
  for (const std::string& m : config.compare_measures) {
    if (auto p = ParseOverlapMeasure(m); !p.ok()) return p.status();
  }
  for (const std::string& m : config.measures) {
    if (auto p = ParseMeasure(m); !p.ok()) return p.status();
  }
  std::set<std::string_view> stages;
  for (const std::string& s : config.stages) {
    if (std::find(std::begin(kStageNames), std::end(kStageNames), s) ==
        std::end(kStageNames)) {
      return absl::InvalidArgumentError(
          absl::StrCat("config: unknown stage '", s, "'"));
    }
    if (!stages.insert(s).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("config: stage '", s, "' listed twice"));
    }
  }
  if (config.StageEnabled("ingest")) {
    if (config.publications.empty() || !Exists(config.publications)) {
      return absl::InvalidArgumentError(
          absl::StrCat("config: publications file '", config.publications,
                       "' does not exist"));
    }
  }
  if (config.StageEnabled("ingest") && config.seminars.empty() &&
      (config.StageEnabled("cohorts") || config.StageEnabled("launchers"))) {
    return absl::InvalidArgumentError(
        "config: the cohorts and launchers stages need a seminars file");
  }
  if (!config.seminars.empty() && !Exists(config.seminars)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "config: seminars file '", config.seminars, "' does not exist"));
  }
  return absl::OkStatus();
}

}  // namespace collabnet

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

#ifndef COLLABNET_UTIL_STRINGS_H_
#define COLLABNET_UTIL_STRINGS_H_

#include <string_view>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace collabnet {

// Some absl builds ship their own string_view class instead of aliasing
// std::string_view; these bridge the two without copying.
inline absl::string_view Absl(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}
inline std::string_view Std(absl::string_view s) {
  return std::string_view(s.data(), s.size());
}

inline std::vector<std::string_view> SplitOn(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (absl::string_view p : absl::StrSplit(Absl(s), sep))
    parts.push_back(Std(p));
  return parts;
}

inline std::string_view StripWhitespace(std::string_view s) {
  return Std(absl::StripAsciiWhitespace(Absl(s)));
}

template <typename Int>
bool ParseInteger(std::string_view s, Int* out) {
  return absl::SimpleAtoi(Absl(s), out);
}

}  // namespace collabnet

#endif  // COLLABNET_UTIL_STRINGS_H_

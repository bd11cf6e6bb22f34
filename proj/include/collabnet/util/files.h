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

#ifndef COLLABNET_UTIL_FILES_H_
#define COLLABNET_UTIL_FILES_H_

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace collabnet {

absl::StatusOr<std::ifstream> OpenForRead(const std::filesystem::path& path);

// Writes a file through a callback; creates parent directories.
absl::Status WriteFile(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& writer);

absl::StatusOr<std::string> ReadFileToString(const std::filesystem::path& path);

// Lowercase hex SHA-256 of a byte string / of a file's contents.
std::string Sha256Hex(std::string_view bytes);
absl::StatusOr<std::string> Sha256OfFile(const std::filesystem::path& path);

}  // namespace collabnet

#endif  // COLLABNET_UTIL_FILES_H_

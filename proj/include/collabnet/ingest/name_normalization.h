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

#ifndef COLLABNET_INGEST_NAME_NORMALIZATION_H_
#define COLLABNET_INGEST_NAME_NORMALIZATION_H_

#include <string>
#include <string_view>

namespace collabnet {

// Canonical form used for every name comparison: Unicode NFC, runs of
// White_Space code points (including U+00A0) collapsed to one U+0020,
// leading and trailing whitespace removed. Case is preserved. Invalid UTF-8
// sequences become U+FFFD. Idempotent.
std::string NormalizeName(std::string_view raw);

}  // namespace collabnet

#endif  // COLLABNET_INGEST_NAME_NORMALIZATION_H_

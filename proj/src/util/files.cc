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

#include "collabnet/util/files.h"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <sstream>

#include "absl/strings/str_cat.h"

namespace collabnet {

absl::StatusOr<std::ifstream> OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("cannot open '", path.string(), "' for reading"));
  }
  return in;
}

absl::Status WriteFile(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& writer) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot create directory '", path.parent_path().string(),
                       "': ", ec.message()));
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open '", path.string(), "' for writing"));
  }
  writer(out);
  out.flush();
  if (!out) {
    return absl::DataLossError(
        absl::StrCat("write to '", path.string(), "' failed"));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadFileToString(
    const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  std::ostringstream buffer;
  buffer << in->rdbuf();
  if (in->bad()) {
    return absl::DataLossError(
        absl::StrCat("read from '", path.string(), "' failed"));
  }
  return buffer.str();
}

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

std::string ToHex(const unsigned char* data, unsigned int len) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kDigits[data[i] >> 4]);
    hex.push_back(kDigits[data[i] & 0xF]);
  }
  return hex;
}

}  // namespace

std::string Sha256Hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  return ToHex(digest.data(), len);
}

absl::StatusOr<std::string> Sha256OfFile(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf;
  while (*in) {
    in->read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<size_t>(in->gcount()));
  }
  if (in->bad()) {
    return absl::DataLossError(
        absl::StrCat("read from '", path.string(), "' failed"));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  return ToHex(digest.data(), len);
}

}  // namespace collabnet

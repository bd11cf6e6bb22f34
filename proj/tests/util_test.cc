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

#include <atomic>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include "collabnet/util/csv.h"
#include "collabnet/util/files.h"
#include "collabnet/util/parallel.h"
#include "collabnet/util/random.h"
#include "collabnet/util/strings.h"
#include "gtest/gtest.h"

namespace collabnet {
namespace {

TEST(CsvTest, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(CsvField("plain"), "plain");
  EXPECT_EQ(CsvField("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvField("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(CsvTest, SplitUndoesWriteOnRandomFields) {
  Rng rng(7);
  const std::string alphabet = "ab ,\"x";
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> fields(1 + rng.UniformIndex(5));
    for (std::string& f : fields) {
      const size_t len = rng.UniformIndex(6);
      for (size_t i = 0; i < len; ++i) {
        f.push_back(alphabet[rng.UniformIndex(alphabet.size())]);
      }
    }
    std::ostringstream out;
    WriteCsvRow(out, fields);
    std::string line = out.str();
    line.pop_back();
    auto back = SplitCsvLine(line);
    ASSERT_TRUE(back.ok()) << line;
    EXPECT_EQ(*back, fields) << line;
  }
}

TEST(CsvTest, UnterminatedQuoteIsAnError) {
  EXPECT_FALSE(SplitCsvLine("\"open,field").ok());
}

TEST(CsvTest, FormatDoubleRoundTrips) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::ldexp(rng.UniformDouble() - 0.5,
                                static_cast<int>(rng.UniformIndex(80)) - 40);
    EXPECT_EQ(std::stod(FormatDouble(x)), x);
  }
  EXPECT_EQ(FormatDouble(0.5), "0.5");
  EXPECT_EQ(FormatOptional(std::nullopt), "NA");
}

TEST(CsvTest, StripLineEndingRemovesBomAndCr) {
  EXPECT_EQ(StripLineEnding("\xEF\xBB\xBFx,y\r", true), "x,y");
  EXPECT_EQ(StripLineEnding("\xEF\xBB\xBFx", false), "\xEF\xBB\xBFx");
}

TEST(CsvTest, TableChecksHeaderAndWidth) {
  std::istringstream good("a,b\n1,2\n\n3,4\n");
  std::vector<std::string> seen;
  ASSERT_TRUE(ReadCsvTable(good, {"a", "b"},
                           [&](const std::vector<std::string>& f, size_t) {
                             seen.push_back(f[0] + f[1]);
                             return absl::OkStatus();
                           })
                  .ok());
  EXPECT_EQ(seen, (std::vector<std::string>{"12", "34"}));

  auto none = [](const std::vector<std::string>&, size_t) {
    return absl::OkStatus();
  };
  std::istringstream wrong_header("a,c\n");
  EXPECT_FALSE(ReadCsvTable(wrong_header, {"a", "b"}, none).ok());
  std::istringstream short_row("a,b\n1\n");
  EXPECT_FALSE(ReadCsvTable(short_row, {"a", "b"}, none).ok());
}

TEST(StringsTest, SplitKeepsEmptyFields) {
  EXPECT_EQ(SplitOn("a||b", '|'),
            (std::vector<std::string_view>{"a", "", "b"}));
  EXPECT_EQ(StripWhitespace("  x y \t"), "x y");
  int v = 0;
  EXPECT_TRUE(ParseInteger("-12", &v));
  EXPECT_EQ(v, -12);
  EXPECT_FALSE(ParseInteger("1x", &v));
}

TEST(FilesTest, Sha256KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(FilesTest, WriteCreatesParentsAndHashMatches) {
  const auto dir = std::filesystem::path(::testing::TempDir()) / "files_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "nested" / "out.txt";
  ASSERT_TRUE(WriteFile(path, [](std::ostream& o) { o << "abc"; }).ok());
  auto text = ReadFileToString(path);
  ASSERT_TRUE(text.ok());
  EXPECT_EQ(*text, "abc");
  auto digest = Sha256OfFile(path);
  ASSERT_TRUE(digest.ok());
  EXPECT_EQ(*digest, Sha256Hex("abc"));
  EXPECT_FALSE(OpenForRead(dir / "missing").ok());
}

TEST(ParallelTest, VisitsEveryIndexOnce) {
  for (int threads : {1, 2, 5}) {
    std::vector<std::atomic<int>> hits(103);
    ParallelFor(0, hits.size(), threads, [&](size_t i) { hits[i]++; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST(ParallelTest, StableSumIsAccurate) {
  std::vector<double> v;
  long double exact = 0;
  for (int i = 1; i <= 10000; ++i) {
    v.push_back(1.0 / i);
    exact += 1.0L / i;
  }
  EXPECT_NEAR(StableSum(v), static_cast<double>(exact), 1e-13);
  EXPECT_EQ(StableSum({}), 0.0);
}

TEST(RandomTest, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(RandomTest, SampleWithoutReplacementIsDistinctAndInRange) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t n = 1 + rng.UniformIndex(50);
    const uint32_t k = rng.UniformIndex(n + 1);
    const auto s = rng.SampleWithoutReplacement(n, k);
    ASSERT_EQ(s.size(), k);
    std::set<uint32_t> distinct(s.begin(), s.end());
    EXPECT_EQ(distinct.size(), k);
    for (uint32_t x : s) EXPECT_LT(x, n);
  }
}

TEST(RandomTest, UniformIndexCoversRange) {
  Rng rng(5);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) counts[rng.UniformIndex(7)]++;
  for (int c : counts) EXPECT_GT(c, 850);
}

}  // namespace
}  // namespace collabnet

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

#include "collabnet/pipeline/pipeline.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "collabnet/pipeline/config.h"
#include "collabnet/util/files.h"
#include "collabnet/util/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace collabnet {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;
using ::testing::HasSubstr;

const std::string kData = COLLABNET_TEST_DATA;

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / "pipeline" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig FixtureConfig(const fs::path& out) {
  RunConfig c;
  c.publications = kData + "/fixture_publications.tsv";
  c.seminars = kData + "/fixture_seminars.csv";
  c.output_dir = out.string();
  c.distance_samples = 100;
  c.random_cohorts = 20;
  c.connected_cohorts = 20;
  return c;
}

TEST(RunConfigTest, ParsesKeysAndComments) {
  auto c = ParseRunConfig(
      "# a comment\n\npublications = in.tsv\nwindow = 3\n"
      "measures = ap, cad\nrefine = false\n");
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_EQ(c->publications, "in.tsv");
  EXPECT_EQ(c->window, 3);
  EXPECT_THAT(c->measures, ::testing::ElementsAre("ap", "cad"));
  EXPECT_FALSE(c->refine);
  EXPECT_EQ(c->step, 1);
}

TEST(RunConfigTest, RejectsUnknownAndRepeatedKeys) {
  EXPECT_THAT(ParseRunConfig("windw = 2\n").status().message(),
              HasSubstr("windw"));
  EXPECT_FALSE(ParseRunConfig("window = 2\nwindow = 3\n").ok());
  EXPECT_FALSE(ParseRunConfig("window 2\n").ok());
  EXPECT_FALSE(ParseRunConfig("window = two\n").ok());
}

TEST(RunConfigTest, SerializeRoundTrips) {
  Rng rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    RunConfig c;
    c.publications = "pubs " + std::to_string(rng.Next());
    c.seminars = trial % 2 ? "" : "s.csv";
    c.window = 1 + rng.UniformIndex(5);
    c.step = 1 + rng.UniformIndex(5);
    c.powerlaw_xmin = 1 + rng.UniformIndex(9);
    c.centrality_tolerance = rng.UniformDouble() * 1e-6;
    c.launcher_threshold = rng.UniformDouble();
    c.cluster_seed = rng.Next();
    c.refine = rng.UniformIndex(2);
    c.career_split_year = trial % 3 ? 0 : 2000 + trial;
    c.stages = {"ingest", "stats"};
    if (trial % 4 == 0) c.measures = {"cad"};
    auto back = ParseRunConfig(SerializeRunConfig(c));
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, c);
    EXPECT_EQ(RunConfigHash(*back), RunConfigHash(c));
  }
}

TEST(RunConfigTest, Validation) {
  const fs::path dir = FreshDir("validation");
  RunConfig c = FixtureConfig(dir);
  EXPECT_TRUE(ValidateRunConfig(c).ok());
  RunConfig bad = c;
  bad.window = 0;
  EXPECT_FALSE(ValidateRunConfig(bad).ok());
  bad = c;
  bad.stages = {"ingest", "bogus"};
  EXPECT_FALSE(ValidateRunConfig(bad).ok());
  bad = c;
  bad.publications = (dir / "missing.tsv").string();
  EXPECT_FALSE(ValidateRunConfig(bad).ok());
  bad = c;
  bad.measures = {"ap", "nope"};
  EXPECT_FALSE(ValidateRunConfig(bad).ok());
}

TEST(ManifestConfigHashTest, IgnoresOutputDirAndThreads) {
  RunConfig a, b;
  b.output_dir = "elsewhere";
  b.threads = 8;
  EXPECT_EQ(ManifestConfigHash(a), ManifestConfigHash(b));
  b.cluster_seed = 2;
  EXPECT_NE(ManifestConfigHash(a), ManifestConfigHash(b));
}

class PipelineRunTest : public ::testing::Test {
 protected:
  // One full run shared by the tests below.
  static void SetUpTestSuite() {
    dir_ = new fs::path(FreshDir("full"));
    auto r = RunPipeline(FixtureConfig(*dir_), {});
    ASSERT_TRUE(r.ok()) << r.status();
  }
  static void TearDownTestSuite() { delete dir_; }
  static fs::path* dir_;
};
fs::path* PipelineRunTest::dir_ = nullptr;

TEST_F(PipelineRunTest, ManifestListsEveryStage) {
  const Json m = Json::parse(Slurp(*dir_ / kManifestFile));
  EXPECT_EQ(m["status"], "ok");
  ASSERT_EQ(m["stages"].size(), std::size(kStageNames));
  for (size_t i = 0; i < std::size(kStageNames); ++i) {
    EXPECT_EQ(m["stages"][i]["name"], kStageNames[i]);
    for (const Json& out : m["stages"][i]["outputs"]) {
      const fs::path p = *dir_ / out["path"].get<std::string>();
      EXPECT_EQ(*Sha256OfFile(p), out["sha256"]);
    }
  }
  auto saved = LoadRunConfig((*dir_ / kConfigFile).string());
  ASSERT_TRUE(saved.ok());
  EXPECT_EQ(*saved, FixtureConfig(*dir_));
}

TEST_F(PipelineRunTest, SecondRunIsByteIdentical) {
  const fs::path other = FreshDir("again");
  RunConfig c = FixtureConfig(other);
  auto r = RunPipeline(c, {.threads = 3});
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(Slurp(*dir_ / kManifestFile), Slurp(other / kManifestFile));
}

TEST_F(PipelineRunTest, LaterStagesReuseEarlierOutputs) {
  const fs::path copy = FreshDir("gated");
  fs::copy(*dir_, copy,
           fs::copy_options::recursive | fs::copy_options::overwrite_existing);
  const std::string before = Slurp(copy / "build" / "coauthorship.graph");
  RunConfig c = FixtureConfig(copy);
  c.stages = {"stats"};
  auto r = RunPipeline(c, {});
  ASSERT_TRUE(r.ok()) << r.status();
  const Json m = Json::parse(Slurp(copy / kManifestFile));
  ASSERT_EQ(m["stages"].size(), 1u);
  EXPECT_EQ(m["stages"][0]["name"], "stats");
  EXPECT_EQ(Slurp(copy / "build" / "coauthorship.graph"), before);
  EXPECT_EQ(Slurp(copy / "stats" / "report.json"),
            Slurp(*dir_ / "stats" / "report.json"));
}

TEST(PipelineFailureTest, ManifestNamesTheFailedStage) {
  const fs::path dir = FreshDir("failing");
  std::ofstream(dir / "garbage.tsv") << "no tabs here\nnor here\n";
  RunConfig c = FixtureConfig(dir / "out");
  c.publications = (dir / "garbage.tsv").string();
  c.seminars.clear();
  c.stages = {"ingest", "build"};
  auto r = RunPipeline(c, {});
  ASSERT_FALSE(r.ok());
  EXPECT_THAT(r.status().message(), HasSubstr("stage ingest failed"));
  const Json m = Json::parse(Slurp(dir / "out" / kManifestFile));
  EXPECT_EQ(m["status"], "failed");
  EXPECT_EQ(m["failed_stage"], "ingest");
  EXPECT_TRUE(m["stages"].empty());
}

int Cli(const std::string& args) {
  const std::string cmd =
      std::string(COLLABNET_CLI) + " " + args + " >/dev/null 2>&1";
  return std::system(cmd.c_str());
}

TEST(CliTest, SubcommandsRunAndReportErrors) {
  const fs::path dir = FreshDir("cli");
  const std::string pubs = kData + "/fixture_publications.tsv";
  EXPECT_EQ(Cli("ingest --pubs " + pubs + " --out " + (dir / "i").string()), 0);
  EXPECT_EQ(Cli("build --in " + (dir / "i").string() + " --out " +
                (dir / "b").string()),
            0);
  EXPECT_EQ(Cli("--threads 2 stats --graph " +
                (dir / "b" / "coauthorship.graph").string() +
                " --samples 10 --out " + (dir / "s").string()),
            0);
  EXPECT_TRUE(fs::exists(dir / "s" / "report.json"));
  EXPECT_NE(Cli("stats --graph " + (dir / "nope").string()), 0);
  EXPECT_NE(Cli("frobnicate"), 0);
  EXPECT_NE(Cli(""), 0);

  std::ofstream(dir / "run.cfg")
      << "publications = " << pubs << "\nstages = ingest,build,stats\n"
      << "distance_samples = 10\n";
  EXPECT_EQ(Cli("--config " + (dir / "run.cfg").string() + " run --out " +
                (dir / "r").string()),
            0);
  const Json m = Json::parse(Slurp(dir / "r" / kManifestFile));
  EXPECT_EQ(m["stages"].size(), 3u);
  std::ofstream(dir / "bad.cfg") << "no_such_key = 1\n";
  EXPECT_NE(Cli("--config " + (dir / "bad.cfg").string() + " run"), 0);
}

}  // namespace
}  // namespace collabnet

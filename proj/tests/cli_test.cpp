// Copyright 2026 The gtc Authors
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


#include <sstream>

#include <gtest/gtest.h>
#include "json.hpp"

#include "gtc/cli.hpp"

namespace gtc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gtc");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, BuildRejectsOddN) {
  Result r = invoke({"build", "--family", "tc", "--n", "7", "--k", "2"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("n must be even"), std::string::npos);
}

TEST(Cli, BuildFormats) {
  Result r = invoke({"build", "--family", "petersen", "--n", "5", "--k", "2",
                     "--format", "graph6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("IheA@GUAo"), std::string::npos);
  EXPECT_EQ(invoke({"build", "--family", "tc", "--n", "6", "--k", "1",
                    "--format", "png"}).code,
            kExitInvalid);
}

TEST(Cli, UnknownFlag) {
  Result r = invoke({"census", "--family", "tc", "--n", "8", "--k", "1", "--bogus"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
}

TEST(Cli, CensusCsvRow) {
  Result r = invoke({"census", "--family", "tc", "--n", "8", "--k", "1",
                     "--lmin", "7", "--lmax", "7", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\n7,16,40,32,40,"), std::string::npos) << r.out;
}

TEST(Cli, CensusIsByteIdenticalAcrossJobs) {
  std::vector<std::string> base{"census", "--family", "tc", "--n", "20",
                                "--k",    "7",        "--lmax", "9",
                                "--format", "json"};
  auto with_jobs = [&](const char* j) {
    auto args = base;
    args.insert(args.end(), {"--jobs", j});
    return invoke(args).out;
  };
  EXPECT_EQ(with_jobs("1"), with_jobs("4"));
}

TEST(Cli, ClassifyStrict) {
  EXPECT_EQ(invoke({"classify", "--n", "16", "--k", "5", "--l", "8", "--strict"}).code,
            kExitOk);
  EXPECT_EQ(invoke({"classify", "--n", "14", "--k", "2", "--l", "7", "--strict"}).code,
            kExitDiscrepancy);
  EXPECT_EQ(invoke({"classify", "--n", "14", "--k", "2", "--l", "7"}).code, kExitOk);
}

TEST(Cli, OrbitsJson) {
  Result r = invoke({"orbits", "--family", "tc", "--n", "10", "--k", "3"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["group_order"], 1440);
  EXPECT_EQ(j["vertex_transitive"], true);
  EXPECT_EQ(j["edge_transitive"], true);
}

TEST(Cli, SweepHits) {
  Result r = invoke({"sweep", "--family", "tc", "--nmax", "20", "--property", "edge"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hits"], nlohmann::json::parse("[[10,3]]"));
}

TEST(Cli, SweepResourceExit) {
  setenv("GTC_NODE_BUDGET", "2", 1);
  Result r = invoke({"sweep", "--family", "tc", "--nmax", "10", "--property", "vertex"});
  unsetenv("GTC_NODE_BUDGET");
  EXPECT_EQ(r.code, kExitResource);
}

TEST(Cli, OrbitsResourceExit) {
  setenv("GTC_NODE_BUDGET", "2", 1);
  Result r = invoke({"orbits", "--family", "tc", "--n", "10", "--k", "3"});
  unsetenv("GTC_NODE_BUDGET");
  EXPECT_EQ(r.code, kExitResource);
}

TEST(Cli, VerifyPetersen) {
  Result r = invoke({"verify", "--petersen", "--nmax", "12"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("petersen"));
}

}  // namespace
}  // namespace gtc::cli

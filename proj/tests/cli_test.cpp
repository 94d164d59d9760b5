// Copyright 2026 The Authors.
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

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct CliRun {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

CliRun run(const std::string& args) {
  const std::string command = std::string(SPANTREE_CLI_PATH) + " " + args + " 2>&1";
  CliRun result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("spantree_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("solve").status, 2);
  EXPECT_EQ(run("bench").status, 2);
  EXPECT_EQ(run("verify nonsense").status, 2);
  EXPECT_EQ(run("gen nonsense").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST_F(CliTest, GenerateThenSolve) {
  const std::string file = path("random.txt");
  ASSERT_EQ(run("gen random --n 12 --m-extra 6 --q 8 --k 3 --seed 4 --out " + file).status, 0);
  const CliRun json = run("solve --instance " + file + " --algo nstm --oracle");
  ASSERT_EQ(json.status, 0) << json.output;
  EXPECT_NE(json.output.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_NE(json.output.find("\"ratio\""), std::string::npos);

  const std::string csv_path = path("report.csv");
  const CliRun csv = run("solve --instance " + file + " --algo exact --format csv --out " + csv_path);
  ASSERT_EQ(csv.status, 0) << csv.output;
  EXPECT_EQ(csv.output.rfind("instance,", 0), 0u) << csv.output;
  EXPECT_TRUE(std::filesystem::exists(csv_path));
}

TEST_F(CliTest, FanReductionReachesOptimum) {
  const std::string file = path("fan.txt");
  ASSERT_EQ(run("gen fan-reduction --n 7 --seed 2 --out " + file).status, 0);
  const CliRun r = run("solve --instance " + file + " --algo greedy-th --oracle");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("\"ran\": true"), std::string::npos);
}

TEST_F(CliTest, RejectsBadInputs) {
  const std::string file = path("ok.txt");
  ASSERT_EQ(run("gen random --n 6 --q 3 --out " + file).status, 0);
  EXPECT_EQ(run("solve --instance " + file + " --k 0").status, 2);
  EXPECT_EQ(run("solve --instance " + file + " --algo fastest").status, 2);
  EXPECT_EQ(run("solve --instance " + file + " --eps 0.9").status, 2);
  EXPECT_EQ(run("solve --instance " + file + " --format xml").status, 2);
  EXPECT_EQ(run("solve --instance " + path("missing.txt")).status, 2);

  const CliRun parse = run("solve --instance " + write("bad.txt", "nstm 1 3 1 1 1\ne 0 9 1\nc 0 2 1\n"));
  EXPECT_EQ(parse.status, 2);
  EXPECT_NE(parse.output.find("line 2"), std::string::npos) << parse.output;

  const std::string split = write("split.txt", "nstm 1 4 2 1 1\ne 0 1 1\ne 2 3 1\nc 0 2 1\n");
  EXPECT_EQ(run("solve --instance " + split).status, 2);
}

TEST_F(CliTest, BenchWritesCsv) {
  const CliRun r = run("bench --sizes 20,30 --budgets 2 --algos nstm,exact,greedy-th");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output.rfind("n,m,q,k,algorithm,repetition,wall_time_seconds,log_gain\n", 0), 0u);
  EXPECT_EQ(std::count(r.output.begin(), r.output.end(), '\n'), 7);
  EXPECT_EQ(run("bench --sizes 1").status, 2);
  EXPECT_EQ(run("bench --sizes 20 --algos slow").status, 2);
}

TEST_F(CliTest, VerifySuite) {
  const CliRun r = run("verify formulas");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("[PASS]"), std::string::npos);
  EXPECT_EQ(r.output.find("[FAIL]"), std::string::npos);
}

}  // namespace

// Copyright 2026 The WGP Authors
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

#include "cli.h"

#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "wgp/io.h"

namespace wgp::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wgp_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::Run(args, out, err);
    out_ = out.str();
    err_ = err.str();
    return code;
  }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
  std::string out_;
  std::string err_;
};

bool Contains(const std::string& text, const std::string& piece) {
  return text.find(piece) != std::string::npos;
}

TEST_F(CliTest, GenerateTrapToFile) {
  ASSERT_EQ(Cli({"gen", "--topology", "trap", "--phases", "3", "-o",
                 Path("t.json")}),
            kExitOk);
  const Instance inst = InstanceFromJson(ReadTextFile(Path("t.json")));
  EXPECT_EQ(inst.network().node_count(), 15);
  EXPECT_EQ(inst.packet_count(), 9);
  EXPECT_TRUE(Contains(out_, "nodes=15")) << out_;
}

TEST_F(CliTest, GenerateWithoutOutputWritesStdout) {
  ASSERT_EQ(Cli({"generate", "--topology", "line", "--nodes", "3"}), kExitOk);
  EXPECT_EQ(InstanceFromJson(out_).network().node_count(), 3);
  EXPECT_TRUE(Contains(err_, "gamma/gamma0=3"));
}

TEST_F(CliTest, GenerateIbm) {
  ASSERT_EQ(Cli({"gen", "--topology", "ibm", "--k", "2", "--phases", "2",
                 "--seed", "4", "-o", Path("i.json")}),
            kExitOk);
  EXPECT_EQ(InstanceFromJson(ReadTextFile(Path("i.json"))).packet_count(), 4);
  ASSERT_EQ(Cli({"gen", "--topology", "ibm", "--u", "2", "--v", "2",
                 "--edges", "0-0,1-1", "--k", "2"}),
            kExitOk);
  EXPECT_EQ(InstanceFromJson(out_).network().node_count(), 6);
}

TEST_F(CliTest, RandomnessNeedsSeed) {
  EXPECT_EQ(Cli({"gen", "--topology", "random", "--nodes", "5"}), kExitUsage);
  EXPECT_EQ(Cli({"gen", "--topology", "ibm", "--k", "2"}), kExitUsage);
}

TEST_F(CliTest, BadArguments) {
  EXPECT_EQ(Cli({}), kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Cli({"gen"}), kExitUsage);
  EXPECT_EQ(Cli({"gen", "--topology", "ring"}), kExitInvalidArgument);
  EXPECT_EQ(Cli({"--help"}), kExitOk);
}

TEST_F(CliTest, RunFifoOnLine) {
  Cli({"gen", "--topology", "line", "--nodes", "3", "-o", Path("l.json")});
  ASSERT_EQ(Cli({"run", "--algo", "fifo", Path("l.json"), "-o",
                 Path("s.json")}),
            kExitOk);
  EXPECT_TRUE(Contains(out_, "max_completion: 2 (2.0000)")) << out_;
  ASSERT_EQ(Cli({"validate", Path("l.json"), Path("s.json")}), kExitOk);
  EXPECT_TRUE(Contains(out_, "max_flow: 2 (2.0000)")) << out_;
}

TEST_F(CliTest, SigmaFifoNeedsValidSigma) {
  Cli({"gen", "--topology", "line", "--nodes", "3", "-o", Path("l.json")});
  EXPECT_EQ(Cli({"run", "--algo", "sigma-fifo", Path("l.json")}), kExitUsage);
  EXPECT_EQ(Cli({"run", "--algo", "sigma-fifo", "--sigma", "0",
                 Path("l.json")}),
            kExitInvalidArgument);
  ASSERT_EQ(Cli({"run", "--algo", "sigma-fifo", "--sigma", "5",
                 Path("l.json"), "--verbose"}),
            kExitOk);
  EXPECT_TRUE(Contains(out_, "max_completion: 2/5 (0.4000)")) << out_;
  EXPECT_TRUE(Contains(out_, "packet origin release")) << out_;
}

TEST_F(CliTest, ExactOnStar) {
  Cli({"gen", "--topology", "star", "--nodes", "4", "--origin", "each", "-o",
       Path("star3.json")});
  ASSERT_EQ(Cli({"exact", "--objective", "completion", Path("star3.json"),
                 "-o", Path("opt.json")}),
            kExitOk);
  EXPECT_TRUE(Contains(out_, "value: 3")) << out_;
  ASSERT_EQ(Cli({"validate", Path("star3.json"), Path("opt.json")}), kExitOk);
}

TEST_F(CliTest, ExactUnknownHasOwnCode) {
  Cli({"gen", "--topology", "trap", "--phases", "1", "-o", Path("t.json")});
  EXPECT_EQ(Cli({"exact", "--budget", "1", "--max-nodes", "20",
                 Path("t.json")}),
            kExitOracleUnknown);
  EXPECT_TRUE(Contains(out_, "unknown")) << out_;
  EXPECT_EQ(Cli({"exact", Path("t.json")}), kExitInvalidArgument);
}

TEST_F(CliTest, ValidateNamesInterferingPair) {
  Cli({"gen", "--topology", "trap", "--phases", "1", "-o", Path("t.json")});
  WriteTextFile(Path("bad.json"),
                R"({"sigma":1,"rounds":[[{"packet":0,"from":3,"to":1},)"
                R"({"packet":1,"from":7,"to":8}]]})");
  EXPECT_EQ(Cli({"validate", Path("t.json"), Path("bad.json")}),
            kExitScheduleViolation);
  EXPECT_TRUE(Contains(out_, "interference")) << out_;
  EXPECT_TRUE(Contains(out_, "packet 0 3->1")) << out_;
}

TEST_F(CliTest, ErrorClassesHaveDistinctCodes) {
  WriteTextFile(Path("junk.json"), "{not json");
  EXPECT_EQ(Cli({"run", Path("junk.json")}), kExitMalformedInput);
  WriteTextFile(Path("split.json"),
                R"({"nodes":3,"edges":[[0,1]],"sink":0,"d_I":1,"packets":[]})");
  EXPECT_EQ(Cli({"run", Path("split.json")}), kExitInvalidInstance);
  EXPECT_EQ(Cli({"run", Path("missing.json")}), kExitIoError);
}

TEST_F(CliTest, BoundsTable) {
  Cli({"gen", "--topology", "line", "--nodes", "3", "--packets", "2", "-o",
       Path("p.json")});
  ASSERT_EQ(Cli({"bounds", Path("p.json")}), kExitOk);
  EXPECT_TRUE(Contains(out_, "1 4 7 3 0")) << out_;
  EXPECT_TRUE(Contains(out_, "best_lower_bound: 3")) << out_;
  ASSERT_EQ(Cli({"bounds", "--csv", Path("p.json")}), kExitOk);
  EXPECT_TRUE(Contains(out_, "packet,completion,upper_bound,slack,root\n"));
}

TEST_F(CliTest, CompareWritesOrderedCsv) {
  fs::create_directories(dir_ / "corpus");
  for (int seed = 0; seed < 4; ++seed) {
    Cli({"gen", "--topology", "random", "--nodes", "5", "--packets", "2",
         "--origin", "uniform", "--seed", std::to_string(seed), "-o",
         Path("corpus/i" + std::to_string(seed) + ".json")});
  }
  ASSERT_EQ(Cli({"compare", Path("corpus"), "--algos", "fifo,sigma-fifo",
                 "--sigma", "4", "--jobs", "3"}),
            kExitOk);
  std::istringstream lines(out_);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("instance,algo,sigma,max_completion,max_flow,", 0), 0u);
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].rfind("i0.json,fifo,1,", 0), 0u);
  EXPECT_EQ(rows[1].rfind("i0.json,sigma-fifo,4,", 0), 0u);
  EXPECT_EQ(rows[7].rfind("i3.json,sigma-fifo,4,", 0), 0u);
  for (const std::string& row : rows) {
    EXPECT_FALSE(Contains(row, ",no")) << row;
  }
}

TEST_F(CliTest, CompareReportsUnknown) {
  fs::create_directories(dir_ / "corpus");
  Cli({"gen", "--topology", "trap", "--phases", "2", "-o",
       Path("corpus/t.json")});
  EXPECT_EQ(Cli({"compare", Path("corpus"), "--algos", "fifo"}),
            kExitOracleUnknown);
  EXPECT_TRUE(Contains(out_, "unknown"));
}

}  // namespace
}  // namespace wgp::cli

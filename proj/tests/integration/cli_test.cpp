// Copyright 2026 The hybridchain Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{
   int run(const std::string& args)
   {
      std::string cmd    = std::string(SIM_BINARY) + " " + args + " >/dev/null 2>&1";
      int         status = std::system(cmd.c_str());
      return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
   }

   fs::path scratch(const std::string& name)
   {
      auto p = fs::temp_directory_path() / ("hybridchain-cli-" + name);
      fs::remove_all(p);
      fs::create_directories(p);
      return p;
   }

   fs::path write(const fs::path& dir, const std::string& text)
   {
      auto p = dir / "scenario.conf";
      std::ofstream(p) << text;
      return p;
   }

   const char* small = "run_duration_ms = 120000\n[workload]\ndomains = 8\nproviders = 3\npublish_per_provider = 1\n"
                       "selects = 2\ndeploys = 2\nbreaches_per_group = 1\nbatches = 1\nbatch_size = 2\n";
}  // namespace

TEST(Cli, ValidateConfigExitCodes)
{
   auto dir = scratch("validate");
   EXPECT_EQ(run("validate-config " + std::string(CONFIG_DIR) + "/paper-default.conf"), 0);
   EXPECT_EQ(run("validate-config " + write(dir, "[network]\nvalidators = 0\n").string()), 2);
   EXPECT_EQ(run("validate-config " + write(dir, "[network]\nvalidators = x\n").string()), 2);
   EXPECT_EQ(run("validate-config " + (dir / "missing.conf").string()), 2);
}

TEST(Cli, UsageErrorsExitWithValidationCode)
{
   EXPECT_EQ(run("run --seed 1"), 2);
   EXPECT_EQ(run("frobnicate"), 2);
   EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, RunWritesOutputs)
{
   auto dir  = scratch("run");
   auto conf = write(dir, small);
   EXPECT_EQ(run("run --config " + conf.string() + " --seed 3 --out " + (dir / "out").string() + " --trace"), 0);
   for (auto f : {"samples.csv", "summary.txt", "trace.tsv", "consensus_trace.tsv"})
      EXPECT_TRUE(fs::exists(dir / "out" / f)) << f;
   std::ifstream in(dir / "out" / "samples.csv");
   std::string   header;
   std::getline(in, header);
   EXPECT_EQ(header, "tx_id,kind,submit_ms,final_ms,latency_ms,enclave_ms,block_height,group_id");
}

TEST(Cli, SweepWritesOnePointPerValue)
{
   auto dir  = scratch("sweep");
   auto conf = write(dir, small);
   EXPECT_EQ(run("sweep --config " + conf.string() + " --param block-interval --values 2500,5000 --out " +
                 (dir / "out").string()),
             0);
   EXPECT_TRUE(fs::exists(dir / "out" / "block-interval-2500" / "samples.csv"));
   EXPECT_TRUE(fs::exists(dir / "out" / "block-interval-5000" / "summary.txt"));
   EXPECT_TRUE(fs::exists(dir / "out" / "sweep.txt"));
   EXPECT_EQ(run("sweep --config " + conf.string() + " --param gas --values 1 --out " + (dir / "x").string()), 2);
   EXPECT_EQ(run("sweep --config " + conf.string() + " --param block-interval --values 1,abc --out " +
                 (dir / "x").string()),
             2);
}

// Copyright 2026 The intorder Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result RunCli(const std::string& args) {
  const std::string cmd = std::string(INTORDER_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("intorder_cli_" + name))
      .string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(RunCli("--help").code, 0);
  EXPECT_EQ(RunCli("gen --help").code, 0);
  EXPECT_EQ(RunCli("").code, 2);
  EXPECT_EQ(RunCli("gen --model er").code, 2);
  EXPECT_EQ(RunCli("gen --d 10 --frobnicate").code, 2);
  EXPECT_EQ(RunCli("gen --model tree --d 10").code, 2);
}

TEST(Cli, GenWritesEdgeList) {
  const Result r = RunCli("gen --model ba --d 100 --m 3 --kappa 3 --seed 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("d=100 model=ba m=3 kappa=3 seed=1\n", 0), 0u);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 1 + 294);
  EXPECT_EQ(RunCli("gen --model ba --d 100 --m 3 --kappa 3 --seed 1").out, r.out);
}

TEST(Cli, EvalGraphFile) {
  const std::string path = TempPath("chain.txt");
  {
    std::ofstream f(path);
    f << "d=4 model=custom seed=0\n0 1\n1 2\n2 3\n";
  }
  const Result r = RunCli("eval --graph " + path + " --targets 0,1,2,3");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"f\": 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"g\": 0"), std::string::npos) << r.out;
  const std::string oracle = TempPath("oracle.csv");
  EXPECT_EQ(RunCli("eval --graph " + path + " --oracle-out " + oracle).code, 0);
  EXPECT_FALSE(Slurp(oracle).empty());
  EXPECT_EQ(RunCli("eval --graph /nonexistent/g.txt").code, 2);
  std::remove(path.c_str());
  std::remove(oracle.c_str());
}

TEST(Cli, EvalExactAboveLimitFails) {
  EXPECT_EQ(RunCli("eval --model er --d 20 --optimizer exact").code, 2);
  EXPECT_EQ(RunCli("eval --model er --d 20 --optimizer heuristic").code, 0);
}

TEST(Cli, BoundsTable) {
  const Result r = RunCli("bounds --d 100 --pe 0.4 --p-int 1 --delta 0.1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("bound_name,d,p_e,c,m,kappa,p_int,delta,t,c_e,value,"
                        "clamped\n",
                        0),
            0u);
  EXPECT_NE(r.out.find("ba_expectation_g,100,,,3,,1,,,,0,0"), std::string::npos)
      << r.out;
  EXPECT_EQ(RunCli("bounds --d 100 --pe 0.4 --p-int 2").code, 2);
}

TEST(Cli, SweepDeterministicAndCompare) {
  const std::string a = TempPath("a.csv"), b = TempPath("b.csv");
  const std::string args =
      "sweep --ensemble er --d-grid 5,6 --density 0.4 --p-int 0.5 --runs 4 "
      "--seed 7 --workers 1 --out ";
  ASSERT_EQ(RunCli(args + a).code, 0);
  ASSERT_EQ(RunCli(args + b).code, 0);
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_EQ(Slurp(a).rfind("# intorder-results v1\n", 0), 0u);
  const std::string cmp_path = TempPath("cmp.csv");
  const int code = RunCli(args + b + " --compare " + cmp_path).code;
  EXPECT_TRUE(code == 0 || code == 1);
  const std::string cmp = Slurp(cmp_path);
  EXPECT_EQ(cmp.rfind("ensemble,d,density_param", 0), 0u);
  EXPECT_EQ(code == 0, cmp.find(",fail\n") == std::string::npos);
  const Result dev =
      RunCli("fit --target deviation --results " + a + " --metric f --stat std");
  EXPECT_EQ(dev.code, 0);
  EXPECT_EQ(dev.out.rfind("kind,ensemble,", 0), 0u);
  {
    std::ofstream f(b, std::ios::app);
    f << "er,5,oops\n";
  }
  EXPECT_EQ(RunCli("fit --target deviation --results " + b).code, 2);
  std::remove(cmp_path.c_str());
  EXPECT_EQ(RunCli("sweep --set nonsense=1 --runs 1").code, 2);
  const Result cfg = RunCli("sweep --d-grid 9 --print-config");
  EXPECT_EQ(cfg.code, 0);
  EXPECT_NE(cfg.out.find("d_grid = 9"), std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(Cli, FitMaxDegree) {
  const Result r =
      RunCli("fit --target ba-maxdeg --m 3 --kappa 1 --d-grid 30,60 --seeds 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gamma"), std::string::npos) << r.out;
}

TEST(Cli, VerifyExitCodes) {
  const Result ok = RunCli(
      "verify --suite optimizer --mode ancestral --d-min 3 --d-max 5 "
      "--instances 20 --workers 1");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("suite,instances,agreements,violations,status\n", 0),
            0u);
  const Result strict = RunCli(
      "verify --suite optimizer --mode ancestral --d-min 3 --d-max 5 "
      "--instances 20 --min-agreement 1.01 --workers 1");
  EXPECT_EQ(strict.code, 1);
  EXPECT_EQ(RunCli("verify --d-max 30").code, 2);
}

}  // namespace

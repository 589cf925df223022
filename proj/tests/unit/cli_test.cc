// Copyright 2026 The pdhg-lp Authors
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


#include "commands.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "svg_plot.h"

namespace pdhg::tools {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> argv;
  argv.insert(argv.end(), args.begin(), args.end());
  const int code = RunCli(argv, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::filesystem::path TempPath(const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::path(::testing::TempDir()) / "pdhg_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

int CountLines(const std::string& text) {
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  return lines;
}

TEST(CliTest, SolveNonuniqueDual) {
  const CliRun run = Cli({"solve", "builtin:nonunique-dual?kappa=1e-2"});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("status: optimal"), std::string::npos) << run.out;
}

TEST(CliTest, IterationLimitExitCode) {
  const CliRun run = Cli({"solve", "builtin:nonunique-dual", "--max-iters", "0"});
  EXPECT_EQ(run.code, kExitIterationLimit);
  EXPECT_NE(run.out.find("status: iteration_limit"), std::string::npos);
}

TEST(CliTest, MalformedMpsExitsWithError) {
  const CliRun run =
      Cli({"solve", std::string(PDHG_TEST_DATA_DIR) + "/malformed.mps"});
  EXPECT_EQ(run.code, kExitError);
  EXPECT_NE(run.err.find("error:"), std::string::npos);
}

TEST(CliTest, BadArgumentsExitWithError) {
  EXPECT_EQ(Cli({"solve", "builtin:house?kappa=2"}).code, kExitError);
  EXPECT_EQ(Cli({"solve", "builtin:house?color=red"}).code, kExitError);
  EXPECT_EQ(Cli({"solve", "builtin:nosuch"}).code, kExitError);
  EXPECT_EQ(Cli({"solve", "builtin:house", "--tol", "abc"}).code, kExitError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitError);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliTest, SolveLogIsDeterministic) {
  const auto a = TempPath("solve_a.csv");
  const auto b = TempPath("solve_b.csv");
  ASSERT_EQ(Cli({"solve", "builtin:house", "--log", a.string()}).code, kExitOk);
  ASSERT_EQ(Cli({"solve", "builtin:house", "--log", b.string()}).code, kExitOk);
  const std::string text = ReadFile(a);
  EXPECT_EQ(text, ReadFile(b));
  EXPECT_EQ(text.rfind("iter,kkt,ps_step_norm,dist_to_final,active_primal,"
                       "active_dualslack\n",
                       0),
            0u);
}

TEST(CliTest, LogCadenceFromEnvironment) {
  const auto dense = TempPath("cadence_env.csv");
  const auto sparse = TempPath("cadence_default.csv");
  ASSERT_EQ(Cli({"solve", "builtin:house", "--log", sparse.string()}).code,
            kExitOk);
  ASSERT_EQ(setenv("PDHG_LOG_EVERY", "1", 1), 0);
  const CliRun run = Cli({"solve", "builtin:house", "--log", dense.string()});
  unsetenv("PDHG_LOG_EVERY");
  ASSERT_EQ(run.code, kExitOk);
  EXPECT_GT(CountLines(ReadFile(dense)), 5 * CountLines(ReadFile(sparse)) / 2);
  // An explicit flag wins over the environment.
  ASSERT_EQ(setenv("PDHG_LOG_EVERY", "1", 1), 0);
  const auto flagged = TempPath("cadence_flag.csv");
  ASSERT_EQ(Cli({"solve", "builtin:house", "--log-every", "10", "--log",
                 flagged.string()})
                .code,
            kExitOk);
  unsetenv("PDHG_LOG_EVERY");
  EXPECT_EQ(ReadFile(flagged), ReadFile(sparse));
  ASSERT_EQ(setenv("PDHG_LOG_EVERY", "zero", 1), 0);
  EXPECT_EQ(Cli({"solve", "builtin:house"}).code, kExitError);
  unsetenv("PDHG_LOG_EVERY");
}

TEST(CliTest, TwoStageReportAndPlot) {
  const auto report = TempPath("two_stage.txt");
  const auto plot1 = TempPath("two_stage_1.svg");
  const auto plot2 = TempPath("two_stage_2.svg");
  const CliRun run = Cli({"two-stage", "builtin:nonunique-dual?kappa=1e-2", "--report",
                       report.string(), "--plot", plot1.string(),
                       "--no-timestamp"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  ASSERT_EQ(Cli({"two-stage", "builtin:nonunique-dual?kappa=1e-2", "--plot",
                 plot2.string(), "--no-timestamp"})
                .code,
            kExitOk);
  const std::string text = ReadFile(report);
  for (const char* key : {"empirical_iter:", "theoretical_K:", "delta:",
                          "alpha_L1_lower:", "alpha_L2_lower:", "N: [1,2]",
                          "B1: [0]"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key << "\n" << text;
  }
  const std::string svg = ReadFile(plot1);
  EXPECT_EQ(svg, ReadFile(plot2));
  EXPECT_EQ(svg.find("generated"), std::string::npos);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
}

TEST(CliTest, HouseSweepWritesFiles) {
  const auto dir = TempPath("sweep");
  const CliRun run = Cli({"house-sweep", "--kappas", "0.5", "--deltas", "0.1,0",
                       "--out", dir.string(), "--no-timestamp"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "house_kappa0.5_delta0.1.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "house_kappa0.5_delta0.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "house_kappa0.5.svg"));
  EXPECT_EQ(CountLines(run.out), 2);
}

TEST(CliTest, PerturbCompareZeroSigmaGivesIdenticalCurves) {
  const auto dir = TempPath("perturb");
  const CliRun run = Cli({"perturb-compare", "builtin:house", "--sigma", "0",
                       "--out", dir.string(), "--no-timestamp"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(ReadFile(dir / "original.csv"), ReadFile(dir / "perturbed.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "compare.svg"));
}

TEST(CliTest, SharpnessOnTinyInstance) {
  const CliRun run = Cli({"sharpness", "builtin:nonunique-dual?kappa=1e-3"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("alpha_empirical_upper:"), std::string::npos);
  EXPECT_NE(run.out.find("alpha_L1_lower:"), std::string::npos);
  EXPECT_NE(run.out.find("certified:"), std::string::npos);
}

TEST(SvgPlotTest, LogAxisAndEscaping) {
  PlotSeries series{.label = "a<b", .x = {0, 1, 2}, .y = {1, 1e-3, 1e-6}};
  PlotOptions options;
  options.timestamp = false;
  const std::string svg = RenderLogPlot({series}, options);
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find(">1e-6<"), std::string::npos) << svg;
  options.timestamp = true;
  EXPECT_NE(RenderLogPlot({series}, options).find("<!-- generated"),
            std::string::npos);
}

}  // namespace
}  // namespace pdhg::tools

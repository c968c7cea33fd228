// Copyright 2026 The semicycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semicycle_cli/run.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace semicycle::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "semicycle");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("semicycle_cli_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path dir_;
};

TEST_F(CliTest, ThresholdTable) {
  const Result r = invoke({"thresholds", "--delta", "0:3:0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "delta,theta,psi_rho_1,threshold");
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 31u);
  const double pi = std::numbers::pi;
  const double s2 = std::numbers::sqrt2;
  EXPECT_EQ(rows[0][0], 0.0);
  EXPECT_NEAR(rows[0][1], pi / 2, 1e-6);
  EXPECT_NEAR(rows[0][2], pi / 2, 1e-6);
  EXPECT_NEAR(rows[0][3], pi, 1e-6);
  EXPECT_EQ(rows[29][0], 2.9);
  EXPECT_NEAR(rows[29][1], s2, 1e-9);
  EXPECT_NEAR(rows[29][2], s2, 1e-6);
  EXPECT_NEAR(rows[29][3], 2 * s2, 1e-6);
}

TEST_F(CliTest, CachedTableMatchesFreshValues) {
  const std::vector<std::string> args = {"table", "--rho", "0.5:2:0.375", "--delta",
                                         "0:3:0.75"};
  std::vector<std::string> fresh = args;
  fresh.push_back("--no-cache");
  const Result first = invoke(args);
  const Result second = invoke(args);
  const Result uncached = invoke(fresh);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, uncached.out);
  const auto rows = parse_csv(first.out);
  ASSERT_EQ(rows.size(), 25u);
  // Monotone along both axes.
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const double v = rows[5 * i + j][2];
      if (j > 0) {
        EXPECT_LE(v, rows[5 * i + j - 1][2] + 1e-9);
      }
      if (i > 0) {
        EXPECT_LE(v, rows[5 * (i - 1) + j][2] + 1e-9);
      }
    }
  }
  const Result single = invoke({"table", "--rho", "1", "--delta", "0,3"});
  const auto cells = parse_csv(single.out);
  EXPECT_NEAR(cells[0][2], std::numbers::pi / 2, 1e-6);
  EXPECT_NEAR(cells[1][2], std::numbers::sqrt2, 1e-9);
}

TEST_F(CliTest, Spectrum) {
  const Result r = invoke({"spectrum", "--delay", "4", "--sign", "+", "--branches", "0..2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NEAR(rows[0][1], 0.34, 0.005);
  EXPECT_NEAR(rows[0][2], 0.37, 0.005);
  EXPECT_NEAR(rows[0][4], 8.45, 0.005);
  EXPECT_EQ(invoke({"spectrum", "--sign", "x"}).code, kExitParse);
}

TEST_F(CliTest, ReproWritesAtomically) {
  const fs::path out = dir_ / "repro.csv";
  const fs::path svg = dir_ / "repro.svg";
  const Result r = invoke({"repro", "example3", "--epsilon", "0", "--periods", "3", "--out",
                           out.string(), "--svg", svg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto rows = parse_csv(slurp(out));
  ASSERT_GT(rows.size(), 100u);
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row[3]);
  EXPECT_LT(worst, 1e-6);
  EXPECT_EQ(slurp(svg).rfind("<svg", 0), 0u);
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos);
  }
}

TEST_F(CliTest, SimulateAndClassifyFromJson) {
  const std::string problem = write("p.json", R"({
    "p": {"breakpoints": [0], "segments": [], "left": 1, "right": 1},
    "tau": 0,
    "history": 1,
    "initial_value": 1,
    "initial_slope": 0
  })");
  const Result sim = invoke({"simulate", "-i", problem, "--horizon", "1", "--step", "0.01"});
  ASSERT_EQ(sim.code, 0) << sim.err;
  const auto rows = parse_csv(sim.out);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_NEAR(rows.back()[1], std::cos(1.0), 1e-8);
  EXPECT_NEAR(rows.back()[2], -std::sin(1.0), 1e-8);

  const Result cls = invoke({"classify", "-i", problem, "--horizon", "30"});
  ASSERT_EQ(cls.code, 0) << cls.err;
  EXPECT_NE(cls.out.find("\"verdict\": \"inconclusive\""), std::string::npos);
  EXPECT_NE(cls.out.find("\"semicycles\""), std::string::npos);
}

TEST_F(CliTest, ClassifyBuiltInExample) {
  const Result r = invoke({"classify", "--example", "example3", "--epsilon", "0.1",
                           "--periods", "48"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("unbounded_observed"), std::string::npos);
}

TEST_F(CliTest, ParseErrorsReportPosition) {
  const std::string bad = write("bad.json", "{\n  \"p\": 1,\n  \"tau\": [1,\n}\n");
  const Result r = invoke({"simulate", "-i", bad});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("bad.json:4:1"), std::string::npos) << r.err;

  const std::string missing = write("missing.json", R"({"p": 1})");
  const Result m = invoke({"simulate", "-i", missing});
  EXPECT_EQ(m.code, kExitParse);
  EXPECT_NE(m.err.find("tau"), std::string::npos);

  const std::string unsorted = write(
      "unsorted.json",
      R"({"p": {"breakpoints": [1, 0], "segments": [[1]], "left": 0, "right": 0}, "tau": 0})");
  EXPECT_EQ(invoke({"simulate", "-i", unsorted}).code, kExitParse);
  EXPECT_EQ(invoke({"simulate"}).code, kExitParse);
  EXPECT_EQ(invoke({"bogus"}).code, kExitParse);
  EXPECT_EQ(invoke({"thresholds", "--delta", "3:0:1"}).code, kExitParse);
}

TEST_F(CliTest, DomainErrorsNameTheOperation) {
  const std::string problem = write("short.json", R"({"p": 1, "tau": 0, "initial_value": 1})");
  const Result r = invoke({"classify", "-i", problem, "--horizon", "2"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("classify:"), std::string::npos) << r.err;

  const std::string history =
      write("history.json", R"({"p": 1, "tau": 2, "history_start": -1, "initial_value": 1})");
  const Result h = invoke({"simulate", "-i", history, "--horizon", "3"});
  EXPECT_EQ(h.code, kExitDomain);
  EXPECT_NE(h.err.find("integrate:"), std::string::npos) << h.err;

  const Result unwritable =
      invoke({"thresholds", "--delta", "0", "--out", (dir_ / "no/such/dir.csv").string()});
  EXPECT_EQ(unwritable.code, kExitDomain);
}

TEST_F(CliTest, HarnessIsDeterministic) {
  for (const char* kind : {"margins", "comparison", "wronskian", "arches"}) {
    const std::vector<std::string> args = {"harness", "--kind", kind, "--instances", "4",
                                           "--seed", "17"};
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--jobs", "3"});
    const Result a = invoke(args);
    const Result b = invoke(threaded);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << kind;
    EXPECT_GT(parse_csv(a.out).size(), 0u);
  }
  EXPECT_EQ(invoke({"harness", "--kind", "other"}).code, kExitParse);
}

}  // namespace
}  // namespace semicycle::cli

// Copyright 2026 The sphermoments Authors.
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

#include "sphermoments_cli/cli.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace sphermoments::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "sphermoments");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Compares against tests/golden/<name>; SPHERMOMENTS_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(SPHERMOMENTS_GOLDEN_DIR) / name;
  if (const char* update = std::getenv("SPHERMOMENTS_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << "missing golden file " << path;
  EXPECT_EQ(actual, read_file(path)) << "golden mismatch: " << name;
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("sphermoments_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

class SeedEnv : public ::testing::Test {
 protected:
  void SetUp() override { ::unsetenv("SPHERMOMENTS_SEED"); }
  void TearDown() override { ::unsetenv("SPHERMOMENTS_SEED"); }
};

using Moments = SeedEnv;
using Anisotropy = SeedEnv;
using Sweep = SeedEnv;
using Validate = SeedEnv;
using Bench = SeedEnv;
using ExitCodes = SeedEnv;

const std::string kPeanut3 = R"({"schema": "1", "kind": "peanut", "A": [[1,0,0],[0,1,0],[0,0,1]]})";
const std::string kPeanut31 = R"({"kind": "peanut", "A": [[3,0],[0,1]]})";
const std::string kVmf3 = R"({"kind": "vmf", "n": 3, "k": 2, "u": [1,0,0]})";

TEST_F(Moments, IsotropicPeanutGolden) {
  const CliRun r = run({"moments", "--dist-json", kPeanut3});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r.out);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(doc["closed_form"]["covariance"][i][j].get<double>(), i == j ? 1.0 / 3.0 : 0.0, 1e-15);
    }
  }
  EXPECT_TRUE(doc["oracle"].is_null());
  EXPECT_EQ(doc["schema"], "1");
  expect_golden("moments_peanut_identity.json", r.out);
}

TEST_F(Moments, VmfQuadratureAgreement) {
  const CliRun r = run({"moments", "--dist-json", kVmf3, "--oracle", "quad"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r.out);
  EXPECT_LT(doc["max_abs_dev"].get<double>(), 1e-9);
  EXPECT_EQ(doc["oracle"]["method"], "quad");
  EXPECT_EQ(doc["oracle"]["resolution"], 256);
  expect_golden("moments_vmf_quad.json", r.out);
}

TEST_F(Moments, OdfHasOnlyOracle) {
  const CliRun r = run({"moments", "--dist-json", R"({"kind": "odf", "A": [[2,0,0],[0,1,0],[0,0,1]]})",
                     "--oracle", "mc", "--samples", "20000", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r.out);
  EXPECT_TRUE(doc["closed_form"].is_null());
  EXPECT_TRUE(doc["max_abs_dev"].is_null());
  EXPECT_EQ(doc["oracle"]["method"], "mc");
  EXPECT_EQ(doc["oracle"]["samples"], 20000);
  EXPECT_EQ(doc["oracle"]["seed"], 4);
  EXPECT_TRUE(doc["oracle"]["generator"].is_string());
  EXPECT_TRUE(doc["oracle"]["standard_errors"]["second_moment"].is_array());
}

TEST_F(Moments, MonteCarloIsDeterministic) {
  const std::vector<std::string> args = {"moments", "--dist-json", kVmf3, "--oracle", "mc", "--samples", "30000",
                                         "--seed", "77"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  ::setenv("SPHERMOMENTS_SEED", "77", 1);
  const CliRun env = run({"moments", "--dist-json", kVmf3, "--oracle", "mc", "--samples", "30000"});
  EXPECT_EQ(env.out, a.out);
  const CliRun other = run({"moments", "--dist-json", kVmf3, "--oracle", "mc", "--samples", "30000", "--seed", "78"});
  EXPECT_NE(other.out, a.out);
}

TEST_F(Moments, DistributionFromFile) {
  const fs::path path = temp_path("dist.json");
  std::ofstream(path) << kVmf3;
  const CliRun file = run({"moments", "--dist", "@" + path.string()});
  const CliRun inline_json = run({"moments", "--dist-json", kVmf3});
  const CliRun inline_dist = run({"moments", "--dist", kVmf3});
  fs::remove(path);
  ASSERT_EQ(file.code, 0) << file.err;
  EXPECT_EQ(file.out, inline_json.out);
  EXPECT_EQ(file.out, inline_dist.out);
}

TEST_F(Moments, UnnormalizedBinghamReportsMass) {
  const CliRun r = run({"moments", "--dist-json",
                     R"({"kind": "bingham", "A": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]], "delta": 0.5})",
                     "--oracle", "mc", "--samples", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r.out);
  EXPECT_FALSE(doc["normalized"].get<bool>());
  EXPECT_TRUE(doc["oracle"]["mass"].is_number());
}

TEST_F(Anisotropy, PeanutGolden) {
  const CliRun r = run({"anisotropy", "--dist-json", kPeanut31, "--s", "1", "--mu", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r.out);
  EXPECT_NEAR(doc["fa"].get<double>(), 0.34299717028501767, 1e-15);
  EXPECT_NEAR(doc["ratio"].get<double>(), 5.0 / 3.0, 1e-15);
  EXPECT_EQ(doc["path"], "closed_form");
  EXPECT_NE(r.out.find("\"fa2_max\": 0.632455532034,"), std::string::npos);
  EXPECT_NE(r.out.find("\"fa3_max\": 0.603022689156,"), std::string::npos);
  EXPECT_NE(r.out.find("\"r_max\": 3"), std::string::npos);
  expect_golden("anisotropy_peanut_diag31.json", r.out);
}

TEST_F(Anisotropy, BimodalLimits) {
  const CliRun zero = run({"anisotropy", "--dist-json", R"({"kind": "bimodal_vmf", "k": 0, "u": [1,0,0]})"});
  ASSERT_EQ(zero.code, 0) << zero.err;
  EXPECT_EQ(parse(zero.out)["fa"].get<double>(), 0.0);
  EXPECT_EQ(parse(zero.out)["ratio"].get<double>(), 1.0);
  const CliRun big = run({"anisotropy", "--dist-json", R"({"kind": "bimodal_vmf", "k": 500, "u": [0,0,1]})"});
  ASSERT_EQ(big.code, 0);
  const auto doc = parse(big.out);
  ASSERT_TRUE(doc["ratio"].is_number());
  EXPECT_GT(doc["ratio"].get<double>(), 100.0);
  EXPECT_GT(doc["fa"].get<double>(), 0.99);
}

TEST_F(Anisotropy, HighDimensionHasNoFa) {
  const CliRun r = run({"anisotropy", "--dist-json", R"({"kind": "vmf", "k": 2, "u": [0,0,0,1]})", "--s", "2",
                     "--mu", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r.out);
  EXPECT_TRUE(doc["fa"].is_null());
  EXPECT_EQ(doc["path"], "generic");
  EXPECT_EQ(doc["eigenvalues"].size(), 4u);
}

TEST_F(Sweep, ConcentrationCsvGolden) {
  const CliRun r = run({"sweep", "--param", "k", "--grid-log", "1e-3", "1e3", "25", "--kind", "bimodal_vmf", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "value,fa,ratio,mean_norm,eig_1,eig_2,eig_3");
  std::vector<double> fa;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string value;
    std::string cell;
    std::getline(cells, value, ',');
    std::getline(cells, cell, ',');
    fa.push_back(std::stod(cell));
  }
  ASSERT_EQ(fa.size(), 25u);
  EXPECT_LT(fa.front(), 0.01);
  EXPECT_GT(fa.back(), 0.99);
  for (std::size_t i = 1; i < fa.size(); ++i) EXPECT_GE(fa[i], fa[i - 1]);
  expect_golden("sweep_k_bimodal_n3.csv", r.out);
}

TEST_F(Sweep, EigenRatioApproachesBound) {
  const CliRun r = run({"sweep", "--param", "eigen_ratio", "--grid-log", "1", "1e8", "30", "--n", "2", "--format",
                     "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r.out);
  double prev = -1.0;
  for (const auto& row : doc["rows"]) {
    const double fa = row["fa"].get<double>();
    EXPECT_GE(fa, prev);
    EXPECT_LT(fa, 2.0 / std::sqrt(10.0));
    prev = fa;
  }
  EXPECT_NEAR(prev, 2.0 / std::sqrt(10.0), 1e-6);
  expect_golden("sweep_eigen_ratio_n2.json", r.out);
}

TEST_F(Sweep, SinglePointMatchesAnisotropy) {
  const CliRun sweep = run({"sweep", "--param", "eigen_ratio", "--grid", "3", "--n", "2", "--format", "json"});
  const CliRun single = run({"anisotropy", "--dist-json", kPeanut31});
  ASSERT_EQ(sweep.code, 0);
  const auto rows = parse(sweep.out)["rows"];
  ASSERT_EQ(rows.size(), 1u);
  const auto doc = parse(single.out);
  EXPECT_EQ(rows[0]["fa"], doc["fa"]);
  EXPECT_EQ(rows[0]["ratio"], doc["ratio"]);
  EXPECT_EQ(rows[0]["eigenvalues"], doc["eigenvalues"]);

  const std::string base = R"({"kind": "bimodal_vmf", "k": 1, "u": [0,1,0]})";
  const CliRun ks = run({"sweep", "--param", "k", "--grid", "7.5", "--dist-json", base, "--format", "json", "--s", "2"});
  const CliRun one = run({"anisotropy", "--dist-json", R"({"kind": "bimodal_vmf", "k": 7.5, "u": [0,1,0]})", "--s", "2"});
  ASSERT_EQ(ks.code, 0) << ks.err;
  EXPECT_EQ(parse(ks.out)["rows"][0]["fa"], parse(one.out)["fa"]);
  EXPECT_EQ(parse(ks.out)["rows"][0]["ratio"], parse(one.out)["ratio"]);
}

TEST_F(Sweep, WritesFile) {
  const fs::path path = temp_path("sweep.csv");
  const CliRun r = run({"sweep", "--param", "k", "--grid", "1,2", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string text = read_file(path);
  fs::remove(path);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST_F(Validate, SmokeIsFastAndDeterministic) {
  const auto t0 = std::chrono::steady_clock::now();
  const CliRun a = run({"validate", "--level", "smoke", "--seed", "3"});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_LT(seconds, 10.0);
  const auto doc = parse(a.out);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["suites"].size(), 10u);
  const CliRun b = run({"validate", "--level", "smoke", "--seed", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Bench, MedianRows) {
  for (const char* repeats : {"1", "10"}) {
    const CliRun r = run({"bench", "--n", "3", "--k-grid", "2", "--repeats", repeats, "--resolution", "64"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header,
              "n,k,oracle,oracle_size,repeats,closed_form_seconds,oracle_seconds,speedup,asserted,pass");
    EXPECT_EQ(row.rfind(std::string("3,2,quad,64,") + repeats + ",", 0), 0u) << row;
  }
}

TEST_F(Bench, AssertsSpeedupAtResolution256) {
  const CliRun ok = run({"bench", "--n", "3", "--k-grid", "5", "--repeats", "3"});
  ASSERT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find(",1,1\n"), std::string::npos);
}

TEST_F(ExitCodes, Success) {
  EXPECT_EQ(run({"--help"}).code, 0);
  const CliRun help = run({"bench", "--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("CSV columns (bench)"), std::string::npos);
}

TEST_F(ExitCodes, CheckFailure) {
  const CliRun r = run({"bench", "--n", "3", "--k-grid", "5", "--repeats", "1", "--required-speedup", "1e300"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(",1,0\n"), std::string::npos);
}

TEST_F(ExitCodes, InputErrors) {
  const std::vector<std::vector<std::string>> cases = {
      {},
      {"frobnicate"},
      {"moments"},
      {"moments", "--dist-json", "{not json"},
      {"moments", "--dist-json", "[1, 2]"},
      {"moments", "--dist-json", R"({"kind": "vmf", "k": 1, "u": [1, 0], "extra": 1})"},
      {"moments", "--dist-json", R"({"kind": "wedge", "k": 1})"},
      {"moments", "--dist-json", R"({"schema": "2", "kind": "vmf", "k": 1, "u": [1, 0]})"},
      {"moments", "--dist-json", R"({"kind": "vmf", "k": -1, "u": [1, 0]})"},
      {"moments", "--dist-json", R"({"kind": "vmf", "k": 1, "u": [1, 1]})"},
      {"moments", "--dist-json", R"({"kind": "vmf", "n": 3, "k": 1, "u": [1, 0]})"},
      {"moments", "--dist-json", R"({"kind": "peanut", "A": [[1, 0], [0, -1]]})"},
      {"moments", "--dist-json", R"({"kind": "peanut", "A": [[1, 0], [0]]})"},
      {"moments", "--dist-json", R"({"kind": "odf", "A": [[1, 0], [0, 1]]})"},
      {"moments", "--dist-json", R"({"kind": "bingham", "A": [[1, 0], [0, 1]], "delta": 0})"},
      {"moments", "--dist-json", kVmf3, "--dist", kVmf3},
      {"moments", "--dist-json", kVmf3, "--oracle", "lebedev"},
      {"moments", "--dist-json", R"({"kind": "vmf", "k": 1, "u": [1, 0, 0, 0]})", "--oracle", "quad"},
      {"moments", "--dist-json", kVmf3, "--oracle", "mc", "--samples", "100"},
      {"moments", "--dist-json", kVmf3, "--oracle", "quad", "--resolution", "100"},
      {"anisotropy", "--dist-json", R"({"kind": "odf", "A": [[1,0,0],[0,1,0],[0,0,1]]})"},
      {"anisotropy", "--dist-json", kPeanut31, "--s", "0"},
      {"anisotropy", "--dist-json", kPeanut31, "--mu", "-1"},
      {"sweep", "--grid", "1"},
      {"sweep", "--param", "k"},
      {"sweep", "--param", "k", "--grid", "2,1"},
      {"sweep", "--param", "k", "--grid", "-1,1"},
      {"sweep", "--param", "eigen_ratio", "--grid", "0,1"},
      {"sweep", "--param", "k", "--grid", "1", "--kind", "peanut"},
      {"sweep", "--param", "eigen_ratio", "--grid", "1", "--dist-json", kPeanut31},
      {"sweep", "--param", "k", "--grid", "1", "--grid-log", "1", "2", "3"},
      {"sweep", "--param", "k", "--grid-log", "0", "2", "3"},
      {"sweep", "--param", "k", "--grid", "1", "--format", "xml"},
      {"validate", "--level", "exhaustive"},
      {"bench", "--repeats", "0"},
      {"bench", "--n", "1"},
  };
  for (const auto& args : cases) {
    const CliRun r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.code, 2) << joined << "\n" << r.err;
    EXPECT_TRUE(r.out.empty() || args.empty() || r.code != 2) << joined;
  }
  ::setenv("SPHERMOMENTS_SEED", "-4", 1);
  EXPECT_EQ(run({"validate"}).code, 2);
  ::setenv("SPHERMOMENTS_SEED", "12x", 1);
  EXPECT_EQ(run({"validate"}).code, 2);
}

TEST_F(ExitCodes, IoErrors) {
  EXPECT_EQ(run({"moments", "--dist", "@/nonexistent/dir/dist.json"}).code, 3);
  EXPECT_EQ(run({"sweep", "--param", "k", "--grid", "1", "--out", "/nonexistent/dir/out.csv"}).code, 3);
  EXPECT_EQ(run({"sweep", "--param", "k", "--grid", "1", "--out", fs::temp_directory_path().string()}).code, 3);
}

}  // namespace
}  // namespace sphermoments::cli

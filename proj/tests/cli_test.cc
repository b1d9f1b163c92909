// Copyright 2026 The qparch Authors
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


#include "qparch/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qparch/report_io.h"

using namespace qparch;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &text) {
  auto path = std::filesystem::temp_directory_path() / ("qparch_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(cli, qec_distance_target) {
  Invocation r = run({"qec", "distance", "--target-logical-error", "8.6e-19"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["minimal"]["distance"], 29);
  EXPECT_EQ(doc["profile_override"]["distance"], 31);
  EXPECT_EQ(doc["profile_override"]["virtual_per_logical"], 6240);
}

TEST(cli, qec_distance_from_demand) {
  Invocation r = run({"qec", "distance"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["minimal"]["distance"], 29);
}

TEST(cli, qec_distance_fixed) {
  Invocation r = run({"qec", "distance", "--distance", "31"});
  ASSERT_EQ(r.code, 0) << r.err;
  double eps = json::parse(r.out)["requested"]["logical_error_rate"];
  EXPECT_NEAR(eps, 2.6e-20, 0.05 * 2.6e-20);
  Invocation csv = run({"--format", "csv", "qec", "distance", "--distance", "31"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')),
            "role,distance,logical_error_rate,virtual_per_logical,cnot_time_s,hadamard_time_s,measurement_time_s");
}

TEST(cli, qec_distance_unreachable) {
  Invocation r = run({"qec", "distance", "--error-per-gate", "9e-3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("unreachable target"), std::string::npos);
}

TEST(cli, usage_errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"qec"}).code, 2);
  EXPECT_EQ(run({"qec", "distance", "--distance", "thirty"}).code, 2);
  EXPECT_EQ(run({"qec", "distance", "--distance", "30"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "qec", "distance"}).code, 2);
  EXPECT_EQ(run({"estimate", "sim", "--particles", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli, estimate_shor) {
  Invocation r = run({"estimate", "shor", "--bits", "1024"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["app_qubits"], 6144);
  EXPECT_NEAR(doc["distillation_qubits"].get<double>(), 66564, 66.564);
  EXPECT_NEAR(doc["runtime_days"].get<double>(), 1.81, 0.0362);
  EXPECT_EQ(doc["depth_units"], "logical_cycles");
}

TEST(cli, estimate_shor_no_capacity) {
  Invocation r = run({"estimate", "shor", "--bits", "1024", "--machine-logical-qubits", "6144"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("no factory capacity"), std::string::npos);
}

TEST(cli, estimate_shor_sweep_csv) {
  Invocation r = run({"--format", "csv", "estimate", "shor", "--sweep", "512,1024,2048,4096,8192,16384",
               "--machine-logical-qubits", "100000"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kShorSweepCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7) << line;
  }
  EXPECT_EQ(rows, 6);
  EXPECT_NE(r.out.find("\n16384,98304,1696,"), std::string::npos);
}

TEST(cli, estimate_sim) {
  Invocation r = run({"estimate", "sim", "--particles", "61"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["distillation_qubits"], 15860);
  EXPECT_TRUE(doc["consumption_rate"].is_null());
  EXPECT_EQ(doc["operators"].size(), 3u);
}

TEST(cli, pulse_sweep_grid) {
  std::vector<std::string> args = {"pulse", "sweep", "--sequences", "8h,cp,udd", "--pulse-errors", "0,0.005,0.01",
                                   "--tau", "1e-9", "--samples", "2000", "--seed", "7"};
  Invocation a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kPulseSweepCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 9);
  EXPECT_EQ(run(args).out, a.out);
}

TEST(cli, pulse_sweep_baseline) {
  Invocation r = run({"--format", "json", "pulse", "sweep", "--sequences", "8h,cp,udd", "--pulse-errors", "0", "--samples",
               "2000", "--baseline"});
  ASSERT_EQ(r.code, 0) << r.err;
  json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3]["sequence"], "free");
  for (int i = 0; i < 3; ++i) EXPECT_LT(rows[i]["infidelity"].get<double>(), rows[3]["infidelity"].get<double>());
}

TEST(cli, pulse_sweep_malformed) {
  EXPECT_EQ(run({"pulse", "sweep", "--pulse-errors", "0,abc"}).code, 2);
  EXPECT_EQ(run({"pulse", "sweep", "--sequences", "xy8"}).code, 2);
  EXPECT_EQ(run({"pulse", "sweep", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"pulse", "sweep", "--tau", "1e-12"}).code, 2);
}

TEST(cli, frame_exec) {
  auto circuit = temp_file("x_measure.jsonl", "{\"op\":\"pauli\",\"p\":\"X\",\"q\":0}\n"
                                              "{\"op\":\"measure\",\"basis\":\"Z\",\"q\":0,\"raw\":1}\n");
  Invocation r = run({"frame", "exec", "--circuit", circuit.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["outcomes"], json::array({-1}));

  auto empty = temp_file("empty.jsonl", "");
  Invocation e = run({"frame", "exec", "--circuit", empty.string()});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(json::parse(e.out)["outcomes"], json::array());
  EXPECT_EQ(json::parse(e.out)["frame"], "");

  auto bad = temp_file("bad.jsonl", "{\"op\":\"pauli\",\"p\":\"X\",\"q\":0}\n{\"op\":\n");
  Invocation b = run({"frame", "exec", "--circuit", bad.string()});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"frame", "exec", "--circuit", "/nonexistent.jsonl"}).code, 2);
}

TEST(cli, profile_flag_and_environment) {
  auto profile = temp_file("profile.json", R"({"logical_cycle_time": 1e-5})");
  Invocation flag = run({"--profile", profile.string(), "estimate", "shor"});
  ASSERT_EQ(flag.code, 0) << flag.err;
  double base = json::parse(run({"estimate", "shor"}).out)["runtime_seconds"];
  EXPECT_NEAR(json::parse(flag.out)["runtime_seconds"].get<double>(), base / 3, 1e-6 * base);

  ::setenv("QPARCH_PROFILE", profile.string().c_str(), 1);
  Invocation env = run({"estimate", "shor"});
  ::unsetenv("QPARCH_PROFILE");
  EXPECT_EQ(env.out, flag.out);

  auto typo = temp_file("typo.json", R"({"logical_cycle": 1e-5})");
  EXPECT_EQ(run({"--profile", typo.string(), "estimate", "shor"}).code, 2);
}

TEST(cli, output_file) {
  auto path = std::filesystem::temp_directory_path() / "qparch_cli_test_out.json";
  std::filesystem::remove(path);
  Invocation r = run({"estimate", "sim", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), run({"estimate", "sim"}).out);
}

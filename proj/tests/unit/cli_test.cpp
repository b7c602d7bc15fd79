/*
 * Copyright 2026 The orthoinv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orthoinv/cli.hpp"
#include "orthoinv/error.hpp"

namespace orthoinv::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  const Outcome o = invoke(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return Json::parse(o.out);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"no-such-command"}).code, 2);
  EXPECT_EQ(invoke({"graded-dims", "--no-such-flag"}).code, 2);
  EXPECT_EQ(invoke({"graded-dims", "--case", "s9"}).code, 2);
  EXPECT_EQ(invoke({"graded-dims", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"verify-syzygy-s3", "--trials", "0"}).code, 2);
  EXPECT_EQ(invoke({"verify-syzygy-s3", "--prime", "15"}).code, 2);
  EXPECT_FALSE(invoke({"graded-dims", "--case", "s9"}).err.empty());
}

TEST(Cli, CommandList) {
  const auto& names = commands();
  ASSERT_EQ(names.size(), 10u);
  EXPECT_EQ(names.front(), "structural-counts");
  EXPECT_EQ(names.back(), "report-all");
}

TEST(Cli, ExpandSeriesS4) {
  const Json j = invoke_json({"expand-series", "--case", "s4", "--max-degree", "17", "--compare"});
  EXPECT_EQ(j["command"], "expand-series");
  EXPECT_EQ(j["verdict"], "pass");
  const Json& coeffs = j["checks"][0]["observed"];
  ASSERT_EQ(coeffs.size(), 18u);
  EXPECT_EQ(coeffs[16], 1539);
  EXPECT_EQ(coeffs[17], 1827);
}

TEST(Cli, GradedDimsC52Degree2) {
  const Json j = invoke_json({"graded-dims", "--case", "c52", "--max-total-degree", "2"});
  std::map<std::string, int> ranks;
  for (const auto& c : j["checks"]) {
    if (c["observed"].contains("rank")) ranks[c["name"].get<std::string>()] = c["observed"]["rank"].get<int>();
  }
  EXPECT_EQ(ranks.at("c52 dim s^2t^0"), 1);
  EXPECT_EQ(ranks.at("c52 dim s^1t^1"), 1);
  EXPECT_EQ(ranks.at("c52 dim s^0t^2"), 1);
  EXPECT_EQ(ranks.at("c52 dim s^1t^0"), 0);
  EXPECT_EQ(j["config"]["max_total_degree"], 2);
}

TEST(Cli, SyzygyWithSeed7) {
  const Json j = invoke_json({"verify-syzygy-s3", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["config"]["seed"], 7);
  bool residuals = false;
  for (const auto& c : j["checks"]) {
    if (c["observed"].is_object() && c["observed"].contains("trials") && c["observed"]["nonzero"] == 0) {
      EXPECT_EQ(c["observed"]["trials"], 100);
      residuals = true;
    }
  }
  EXPECT_TRUE(residuals);
}

TEST(Cli, ReportSchema) {
  const Json j = invoke_json({"structural-counts"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "config", "checks", "verdict"}));
  for (const auto& c : j["checks"]) {
    std::vector<std::string> ck;
    for (const auto& [k, v] : c.items()) ck.push_back(k);
    EXPECT_EQ(ck, (std::vector<std::string>{"name", "expected", "observed", "verdict", "seconds"}));
    EXPECT_TRUE(c["seconds"].is_null());
  }
  EXPECT_FALSE(j["config"].contains("workers"));
}

TEST(Cli, TimingsAndTextFormat) {
  const Json timed = invoke_json({"structural-counts", "--timings"});
  EXPECT_TRUE(timed["checks"][0]["seconds"].is_number());
  const Outcome text = invoke({"structural-counts", "--format", "text"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("verdict: pass"), std::string::npos);
  EXPECT_NE(text.out.find("PASS"), std::string::npos);
}

TEST(Cli, GlobalOptionsBeforeOrAfterCommand) {
  const Outcome a = invoke({"--seed", "5", "jacobian-rank", "--case", "s3"});
  const Outcome b = invoke({"jacobian-rank", "--case", "s3", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "orthoinv_cli_test_report.json";
  std::filesystem::remove(path);
  const Outcome o = invoke({"check-star-table3", "--out", path.string()});
  EXPECT_EQ(o.code, 0);
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["command"], "check-star-table3");
  EXPECT_EQ(j["verdict"], "pass");
  std::filesystem::remove(path);
}

TEST(Cli, OutputIndependentOfWorkers) {
  const Outcome one = invoke({"graded-dims", "--case", "s4", "--max-degree", "9", "--workers", "1"});
  const Outcome three = invoke({"graded-dims", "--case", "s4", "--max-degree", "9", "--workers", "3"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, FailedCheckExitsWithOne) {
  // A prime this small makes the certified false-pass bound too weak.
  const Outcome o = invoke({"verify-syzygy-s3", "--prime", "1000003", "--trials", "3"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(Json::parse(o.out)["verdict"], "fail");
}

TEST(Cli, RunCommandDirect) {
  RunConfig cfg;
  cfg.case_name = "s3";
  const Report r = run_command("check-minimality", cfg);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks.size(), 6u);
  EXPECT_THROW(run_command("nope", cfg), orthoinv::Error);
}

}  // namespace
}  // namespace orthoinv::cli

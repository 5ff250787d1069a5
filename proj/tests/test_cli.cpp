// Copyright 2026 The hoopforge Authors
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


// Runs the built CLI binary and checks exit codes and report contents.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  std::string const cmd =
      std::string(HOOPFORGE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int const raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& f) {
  return std::string(HOOPFORGE_TEST_DATA) + "/" + f;
}

std::string tmp(const std::string& f) {
  return (fs::temp_directory_path() /
          ("hoopforge_cli_" + std::to_string(::getpid()) + "_" + f))
      .string();
}

}  // namespace

TEST(Cli, CheckTerminal) {
  auto r = cli("check " + data("terminal.alg"));
  EXPECT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["varieties"]["wajsberg"].get<bool>());
}

TEST(Cli, CheckBroken) {
  auto r = cli("check " + data("broken.alg"));
  EXPECT_EQ(r.status, 1);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["error"]["type"], "AxiomViolation");
  EXPECT_EQ(j["witness"]["rule"], "iii");
}

TEST(Cli, CheckVariety) {
  EXPECT_EQ(cli("check " + data("G3.alg") + " --variety godel").status, 0);
  auto r = cli("check " + data("G3.alg") + " --variety wajsberg");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.out)["witness"]["rule"], "wajsberg");
  EXPECT_EQ(cli("check " + data("G3.alg") + " --variety bogus").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("check /nonexistent.alg").status, 2);
  EXPECT_EQ(cli("actions sideways x").status, 2);
  EXPECT_EQ(cli("suite nope").status, 2);
  EXPECT_EQ(cli("check " + data("G3.alg") + " --jobs 0").status, 2);
}

TEST(Cli, CheckIdentity) {
  auto r = cli("check-identity " + data("G3.alg") + " " + data("basic.id"));
  // G3 is not Wajsberg, so one identity fails
  EXPECT_EQ(r.status, 1);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 3u);
  EXPECT_TRUE(j["results"][0]["holds"].get<bool>());
  EXPECT_FALSE(j["results"][1]["holds"].get<bool>());
  EXPECT_TRUE(j["results"][2]["holds"].get<bool>());
}

TEST(Cli, EnumerateAndSave) {
  auto dir = tmp("corpus");
  fs::remove_all(dir);
  auto out = tmp("enum.json");
  auto r = cli("enumerate --max-order 4 --save " + dir + " --out " + out);
  EXPECT_EQ(r.status, 0);
  auto j = json::parse(std::ifstream(out));
  EXPECT_EQ(j["counts"]["4"], 5);
  EXPECT_TRUE(fs::exists(fs::path(dir) / "n4_004.alg"));
  fs::remove_all(dir);
  fs::remove(out);
}

TEST(Cli, FiltersAndQuotient) {
  auto j = json::parse(cli("filters " + data("G3.alg")).out);
  ASSERT_EQ(j["filters"].size(), 3u);
  EXPECT_EQ(j["filters"][1]["members"], json({1, 2}));
  auto q = cli("quotient " + data("G3.alg") + " 1 2");
  EXPECT_EQ(q.status, 0);
  EXPECT_EQ(json::parse(q.out)["quotient"]["order"], 2);
  EXPECT_EQ(cli("quotient " + data("G3.alg") + " 0").status, 1);
}

TEST(Cli, ActionsRoundTrip) {
  auto ext = tmp("g3.json");
  EXPECT_EQ(cli("splitext mvd " + data("G3.alg") + " --out " + ext).status, 0);
  EXPECT_EQ(cli("splitext strong " + ext).status, 0);
  EXPECT_EQ(cli("splitext validate " + ext).status, 0);
  auto t = json::parse(cli("actions tau " + ext).out);
  EXPECT_EQ(t["f"], json({{1, 1}, {0, 1}}));
  EXPECT_EQ(t["g"], json({{1, 1}, {0, 1}}));

  auto v = cli("actions validate " + data("g3_action.json"));
  EXPECT_EQ(v.status, 0);
  auto w = cli("actions validate " + data("g3_action.json") +
               " --variety wajsberg");
  EXPECT_EQ(w.status, 1);
  EXPECT_EQ(json::parse(w.out)["witness"]["rule"], "W2");

  auto mu = json::parse(cli("actions mu " + data("g3_action.json")).out);
  EXPECT_EQ(mu["carrier"], json({{0, 1}, {1, 0}, {1, 1}}));

  auto e = json::parse(cli("actions enumerate " + data("L2.alg") + " " +
                           data("L2.alg"))
                           .out);
  EXPECT_EQ(e["count"], 2);

  EXPECT_EQ(cli("lalg coincide " + ext).status, 0);
  EXPECT_EQ(cli("lalg validate " + data("L3.alg")).status, 0);
  auto s = json::parse(cli("lalg semidirect " + data("g3_action.json")).out);
  EXPECT_EQ(s["order"], 4);
  EXPECT_EQ(s["operation"], json({{1, 1}, {0, 1}}));
  fs::remove(ext);
}

TEST(Cli, VerifyCommands) {
  auto b = cli("actions verify-bijection " + data("L2.alg") + " " +
               data("G3.alg") + " --oracle");
  EXPECT_EQ(b.status, 0);
  auto j = json::parse(b.out);
  EXPECT_EQ(j["actions"], j["oracle_extensions"]);
  EXPECT_EQ(cli("actions verify-naturality " + data("L2.alg") + " " +
                data("G3.alg") + " " + data("L2.alg"))
                .status,
            0);
}

TEST(Cli, SuiteReport) {
  auto out = tmp("suite.json");
  auto r = cli("suite godel --max-order 3 --out " + out);
  EXPECT_EQ(r.status, 0);
  auto j = json::parse(std::ifstream(out));
  EXPECT_EQ(j["suite"], "godel");
  EXPECT_EQ(j["corpus"]["max_order"], 3);
  EXPECT_TRUE(j.contains("tool_version"));
  EXPECT_TRUE(j.contains("timing"));
  EXPECT_EQ(j["failed"], 0);
  auto one = json::parse(cli("suite godel --only 'godel:n2_000/n2_000'").out);
  EXPECT_EQ(one["checks"].size(), 1u);
  fs::remove(out);
}

TEST(Cli, SuiteBijection) {
  auto j = json::parse(cli("suite bijection --max-order 2 --oracle").out);
  EXPECT_TRUE(j["ok"].get<bool>());
  for (auto const& c : j["checks"]) {
    EXPECT_EQ(c["detail"]["actions"], c["detail"]["extensions"]);
    EXPECT_EQ(c["detail"]["actions"], c["detail"]["oracle_extensions"]);
  }
}

// Copyright 2026 The Data Mystery Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "mystery/engine.h"
#include "mystery/game_definition.h"
#include "mystery/solver.h"
#include "test_support.h"

namespace mystery {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  std::string command = std::string(MYSTERY_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  RunResult result;
  if (!pipe) return result;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string Quote(const std::string& s) { return "'" + s + "'"; }

std::string Generate(const std::string& dir, const std::string& name,
                     uint64_t seed) {
  std::string path = dir + "/" + name;
  RunResult r = RunCli("generate --victim 'Mahatma Gandhi' --fixture " +
                       Quote(testing::GandhiFixture()) + " --seed " +
                       std::to_string(seed) + " --out " + Quote(path));
  EXPECT_EQ(r.exit_code, 0);
  return path;
}

TEST(CliTest, GenerateIsDeterministic) {
  std::string dir = testing::TempDir("cli-determinism");
  std::string a = Slurp(Generate(dir, "a.json", 7));
  std::string b = Slurp(Generate(dir, "b.json", 7));
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  EXPECT_NE(a, Slurp(Generate(dir, "c.json", 8)));
  RunResult stdout_run = RunCli("generate --victim 'Mahatma Gandhi' --fixture " +
                                Quote(testing::GandhiFixture()) + " --seed 7");
  EXPECT_EQ(stdout_run.exit_code, 0);
  EXPECT_EQ(stdout_run.out, a);
}

TEST(CliTest, ConfigFileWithFlagOverrides) {
  std::string dir = testing::TempDir("cli-config");
  std::string config = testing::TempFile(
      "cli-config.json",
      json{{"fixture", testing::GandhiFixture()}, {"seed", 7}}.dump());
  RunResult from_config =
      RunCli("generate --victim 'Mahatma Gandhi' --config " + Quote(config));
  EXPECT_EQ(from_config.exit_code, 0);
  EXPECT_EQ(from_config.out, Slurp(Generate(dir, "seven.json", 7)));
  RunResult overridden = RunCli("generate --victim 'Mahatma Gandhi' --config " +
                                Quote(config) + " --seed 8");
  EXPECT_EQ(overridden.out, Slurp(Generate(dir, "eight.json", 8)));

  std::string bad = testing::TempFile("cli-bad-config.json",
                                      R"({"ga": {"bogus": 1}})");
  EXPECT_EQ(RunCli("generate --victim 'Mahatma Gandhi' --fixture " +
                   Quote(testing::GandhiFixture()) + " --config " + Quote(bad))
                .exit_code,
            1);
}

TEST(CliTest, ExitCodes) {
  std::string dir = testing::TempDir("cli-exit");
  EXPECT_EQ(RunCli("generate --victim 'Nobody Known' --fixture " +
                   Quote(testing::GandhiFixture()))
                .exit_code,
            2);
  std::string crowd = testing::TempFile("cli-crowd.json",
                                        R"({"ga": {"suspectCount": 40}})");
  EXPECT_EQ(RunCli("generate --victim 'Mahatma Gandhi' --fixture " +
                   Quote(testing::GandhiFixture()) + " --config " +
                   Quote(crowd))
                .exit_code,
            3);
  std::string broken = testing::TempFile("cli-broken.json", "{\n");
  EXPECT_EQ(RunCli("validate " + Quote(broken)).exit_code, 1);
  EXPECT_EQ(RunCli("solve " + Quote(broken)).exit_code, 1);

  GameDefinition def = testing::GandhiGame(1);
  ASSERT_FALSE(def.puzzles.keys.empty());
  for (const auto& k : def.puzzles.keys) {
    std::erase(def.world.buildings.at(k.building_id).items, k.item_id);
    def.world.items.erase(k.item_id);
  }
  std::string keyless = dir + "/keyless.json";
  SaveDefinition(def, keyless);
  RunResult invalid = RunCli("validate " + Quote(keyless));
  EXPECT_EQ(invalid.exit_code, 4);
  EXPECT_NE(invalid.out.find("key-exists"), std::string::npos) << invalid.out;
  EXPECT_EQ(RunCli("solve " + Quote(keyless)).exit_code, 4);

  std::string good = Generate(dir, "good.json", 1);
  RunResult mixed = RunCli("validate " + Quote(good) + " " + Quote(keyless));
  EXPECT_EQ(mixed.exit_code, 4);
  EXPECT_NE(mixed.out.find("good.json: ok"), std::string::npos);
  EXPECT_NE(RunCli("bogus").exit_code, 0);
}

TEST(CliTest, SolveWritesReplayableLogs) {
  std::string dir = testing::TempDir("cli-solve");
  std::string game = Generate(dir, "game.json", 2);
  std::string logs = dir + "/logs/nested";
  RunResult r = RunCli("solve " + Quote(game) + " --out " + Quote(logs));
  ASSERT_EQ(r.exit_code, 0);
  GameDefinition def = LoadDefinition(game);
  Playthrough run = AutoSolve(def);
  EXPECT_EQ(r.out, game + ": Won in " + std::to_string(run.step_count) +
                       " steps\n");
  SaveFile save = SaveFromJson(
      json::parse(Slurp(logs + "/game.solution.json")));
  EXPECT_EQ(save.actions, run.actions);
  Engine engine(def);
  EXPECT_EQ(Replay(engine, "replay", save.actions).outcome, Outcome::kWon);
}

TEST(CliTest, StatsMatchesTheLibrary) {
  std::string dir = testing::TempDir("cli-stats");
  std::vector<std::string> files = {Generate(dir, "one.json", 1),
                                    Generate(dir, "two.json", 2)};
  std::vector<Metrics> batch;
  for (const auto& f : files) batch.push_back(ComputeMetrics(LoadDefinition(f)));
  std::vector<std::string> names = {"one", "two"};
  std::string args = Quote(files[0]) + " " + Quote(files[1]);

  RunResult csv = RunCli("stats " + args);
  ASSERT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out, MetricsCsv(names, batch));

  RunResult js = RunCli("stats --format json " + args);
  ASSERT_EQ(js.exit_code, 0);
  EXPECT_EQ(json::parse(js.out), json::parse(MetricsJson(names, batch).dump()));

  std::string out = dir + "/stats.csv";
  EXPECT_EQ(RunCli("stats --out " + Quote(out) + " " + args).exit_code, 0);
  EXPECT_EQ(Slurp(out), csv.out);
  EXPECT_NE(RunCli("stats --format xml " + args).exit_code, 0);
}

}  // namespace
}  // namespace mystery

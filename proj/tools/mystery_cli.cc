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

// Command-line front end: generate, validate, solve, stats and serve.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mystery/errors.h"
#include "mystery/game_definition.h"
#include "mystery/pipeline.h"
#include "mystery/server.h"
#include "mystery/solver.h"
#include "mystery/validator.h"

namespace {

using mystery::ErrorCode;

constexpr int kExitParse = 1;
constexpr int kExitVictim = 2;
constexpr int kExitNoPuzzle = 3;
constexpr int kExitInvalid = 4;
constexpr int kExitUnsolvable = 5;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kVictimNotFound:
    case ErrorCode::kVictimNotPerson:
      return kExitVictim;
    case ErrorCode::kNoSolvablePuzzle:
    case ErrorCode::kInsufficientCandidates:
      return kExitNoPuzzle;
    case ErrorCode::kInvalidDefinition:
      return kExitInvalid;
    case ErrorCode::kUnsolvable:
      return kExitUnsolvable;
    default:
      return kExitParse;
  }
}

void WriteOutput(const std::optional<std::string>& path,
                 const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw mystery::Error(ErrorCode::kInvalidArgument,
                         "cannot write " + *path);
  }
  out << text;
}

struct SourceFlags {
  std::optional<std::string> config;
  std::optional<std::string> fixture;
  std::optional<std::string> endpoint;
  std::optional<uint64_t> seed;
  std::optional<std::string> out;
};

mystery::GeneratorConfig ResolveConfig(const SourceFlags& flags) {
  mystery::GeneratorConfig config;
  if (flags.config) config = mystery::GeneratorConfig::Load(*flags.config);
  if (flags.fixture) {
    config.fixture = flags.fixture;
    config.endpoint.reset();
  }
  if (flags.endpoint) {
    config.endpoint = flags.endpoint;
    config.fixture.reset();
  }
  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.output = flags.out;
  config.Validate();
  return config;
}

int RunGenerate(const std::string& victim, const SourceFlags& flags) {
  mystery::GeneratorConfig config = ResolveConfig(flags);
  mystery::KnowledgeStore store = mystery::OpenStore(config);
  mystery::GameDefinition def = mystery::GenerateGame(victim, store, config);
  WriteOutput(config.output, mystery::SerializeDefinition(def));
  if (config.output) {
    std::cerr << "wrote " << *config.output << " ("
              << def.world.cities.size() << " cities, "
              << def.world.npcs.size() << " characters)\n";
  }
  return 0;
}

// Parses every file, reporting parse failures on stderr. Returns the worst
// exit code seen so far.
std::vector<std::pair<std::string, mystery::GameDefinition>> LoadAll(
    const std::vector<std::string>& files, int& status) {
  std::vector<std::pair<std::string, mystery::GameDefinition>> out;
  for (const std::string& file : files) {
    try {
      out.emplace_back(file, mystery::LoadDefinition(file));
    } catch (const mystery::Error& e) {
      std::cerr << e.what() << "\n";
      status = std::max(status, ExitCodeFor(e.code()));
    }
  }
  return out;
}

int RunValidate(const std::vector<std::string>& files) {
  int status = 0;
  for (const auto& [file, def] : LoadAll(files, status)) {
    mystery::ValidationReport report = mystery::ValidateDefinition(def);
    if (report.ok()) {
      std::cout << file << ": ok\n";
    } else {
      std::cout << file << ": " << report.violations.size()
                << " violation(s)\n"
                << report.ToString();
      status = std::max(status, kExitInvalid);
    }
  }
  return status;
}

int RunSolve(const std::vector<std::string>& files,
             const std::optional<std::string>& log_dir) {
  int status = 0;
  if (log_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*log_dir, ec);
  }
  for (const auto& [file, def] : LoadAll(files, status)) {
    mystery::ValidationReport report = mystery::ValidateDefinition(def);
    if (!report.ok()) {
      std::cout << file << ": invalid\n" << report.ToString();
      status = std::max(status, kExitInvalid);
      continue;
    }
    try {
      mystery::Playthrough run = mystery::AutoSolve(def);
      std::cout << file << ": " << mystery::OutcomeName(run.outcome) << " in "
                << run.step_count << " steps\n";
      if (log_dir) {
        std::string name =
            std::filesystem::path(file).stem().string() + ".solution.json";
        mystery::SaveFile save{"auto", mystery::DefinitionHash(def),
                               run.actions};
        WriteOutput((std::filesystem::path(*log_dir) / name).string(),
                    mystery::SaveToJson(save).dump(2) + "\n");
      }
    } catch (const mystery::Error& e) {
      std::cout << file << ": " << e.what() << "\n";
      status = std::max(status, ExitCodeFor(e.code()));
    }
  }
  return status;
}

int RunStats(const std::vector<std::string>& files, const std::string& format,
             const std::optional<std::string>& out) {
  int status = 0;
  std::vector<std::string> names;
  std::vector<mystery::Metrics> batch;
  for (const auto& [file, def] : LoadAll(files, status)) {
    names.push_back(std::filesystem::path(file).stem().string());
    batch.push_back(mystery::ComputeMetrics(def));
  }
  if (format == "json") {
    WriteOutput(out, mystery::MetricsJson(names, batch).dump(2) + "\n");
  } else {
    WriteOutput(out, mystery::MetricsCsv(names, batch));
  }
  return status;
}

mystery::HttpServer* g_server = nullptr;

void HandleSignal(int) {
  if (g_server) g_server->Stop();
}

int RunServe(const std::string& games, const std::string& host, int port,
             const std::string& sessions, bool allow_retry) {
  mystery::ServiceOptions options;
  options.session_dir = sessions;
  options.engine.allow_retry = allow_retry;
  mystery::GameService service(options);
  size_t count = service.LoadDirectory(games);
  if (count == 0) {
    std::cerr << "no game definitions in " << games << "\n";
    return kExitInvalid;
  }
  size_t restored = service.RestoreSessions();
  mystery::HttpServer server(service);
  g_server = &server;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  std::cerr << "serving " << count << " game(s), " << restored
            << " restored session(s) on " << host << ":" << port << "\n";
  bool ok = server.Listen(host, port);
  g_server = nullptr;
  if (!ok) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return kExitParse;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Murder-mystery generator over a knowledge graph"};
  app.require_subcommand(1);

  SourceFlags flags;
  std::string victim;
  CLI::App* generate = app.add_subcommand("generate", "Generate a game");
  generate->add_option("--victim", victim, "Victim name or iri")->required();
  generate->add_option("--config", flags.config, "Generator config file");
  generate->add_option("--fixture", flags.fixture, "Knowledge fixture file");
  generate->add_option("--endpoint", flags.endpoint, "SPARQL endpoint URL");
  generate->add_option("--seed", flags.seed, "Random seed");
  generate->add_option("--out", flags.out, "Output definition file");

  std::vector<std::string> files;
  CLI::App* validate =
      app.add_subcommand("validate", "Check game definitions");
  validate->add_option("files", files, "Definition files")->required();

  std::optional<std::string> log_dir;
  CLI::App* solve = app.add_subcommand("solve", "Auto-play game definitions");
  solve->add_option("files", files, "Definition files")->required();
  solve->add_option("--out", log_dir, "Directory for solution logs");

  std::string format = "csv";
  std::optional<std::string> stats_out;
  CLI::App* stats = app.add_subcommand("stats", "Batch metrics");
  stats->add_option("files", files, "Definition files")->required();
  stats->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  stats->add_option("--out", stats_out, "Output file");

  std::string games_dir;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string session_dir;
  bool allow_retry = false;
  CLI::App* serve = app.add_subcommand("serve", "Serve the /v1 session API");
  serve->add_option("--games", games_dir, "Directory of definitions")
      ->required();
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port");
  serve->add_option("--sessions", session_dir, "Replay log directory");
  serve->add_flag("--allow-retry", allow_retry,
                  "Allow another warrant after a wrong one");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return RunGenerate(victim, flags);
    if (*validate) return RunValidate(files);
    if (*solve) return RunSolve(files, log_dir);
    if (*stats) return RunStats(files, format, stats_out);
    if (*serve) {
      return RunServe(games_dir, host, port, session_dir, allow_retry);
    }
  } catch (const mystery::Error& e) {
    std::cerr << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}

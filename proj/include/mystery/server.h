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

#ifndef MYSTERY_SERVER_H_
#define MYSTERY_SERVER_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mystery/engine.h"
#include "mystery/errors.h"
#include "mystery/game_definition.h"

namespace mystery {

struct ApiResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

struct ServiceOptions {
  // Where replay logs are written; empty disables persistence.
  std::string session_dir;
  EngineOptions engine;
};

// Transport-independent session service behind the /v1 HTTP API.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});
  GameService(const GameService&) = delete;
  GameService& operator=(const GameService&) = delete;

  // Registers a validated definition; throws kInvalidDefinition otherwise.
  void AddGame(const std::string& id, GameDefinition def);
  // Loads every *.json file in `dir`, keyed by file stem. Returns the count.
  size_t LoadDirectory(const std::string& dir);
  // Restores sessions saved under options.session_dir.
  size_t RestoreSessions();

  ApiResponse ListGames() const;
  ApiResponse GetGame(const std::string& id) const;
  ApiResponse CreateSession(const nlohmann::json& request);
  ApiResponse GetState(const std::string& session_id);
  ApiResponse PostAction(const std::string& session_id,
                         const nlohmann::json& request);
  ApiResponse GetSave(const std::string& session_id);

  // Routes a request by method and path, e.g. ("GET", "/v1/games").
  ApiResponse Handle(const std::string& method, const std::string& path,
                     const std::string& body);

  std::vector<std::string> game_ids() const;

 private:
  struct Game {
    GameDefinition def;
    std::string hash;
    std::unique_ptr<Engine> engine;
  };
  struct Session {
    std::mutex mu;
    const Game* game = nullptr;
    std::string game_id;
    GameState state;
  };

  std::shared_ptr<Session> FindSession(const std::string& id);
  void Persist(const Session& session) const;

  ServiceOptions options_;
  std::map<std::string, std::unique_ptr<Game>> games_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  uint64_t next_session_ = 1;
};

ApiResponse ErrorResponse(int status, const std::string& code,
                          const std::string& message);
// HTTP status used for a library error code.
int StatusFor(ErrorCode code);

// Blocks serving `service` until Stop() is called.
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  // Binds and serves; returns false when the address cannot be bound.
  bool Listen(const std::string& host, int port);
  // Binds to an ephemeral port and returns it, or -1.
  int BindAnyPort(const std::string& host);
  // Serves on a socket bound by BindAnyPort.
  bool ListenAfterBind();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mystery

#endif  // MYSTERY_SERVER_H_

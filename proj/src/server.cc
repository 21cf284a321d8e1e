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

#include "mystery/server.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include "httplib.h"
#include "mystery/errors.h"
#include "mystery/validator.h"

namespace mystery {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson GameSummary(const std::string& id, const GameDefinition& def) {
  ojson suspects = ojson::array();
  for (const EntityRef& s : def.solution.suspects) {
    suspects.push_back({{"iri", s.iri}, {"label", s.label}});
  }
  return ojson{{"id", id},
               {"victim", def.metadata.victim},
               {"seed", def.metadata.seed},
               {"generatorVersion", def.metadata.generator_version},
               {"suspects", suspects},
               {"cityCount", def.world.cities.size()},
               {"buildingCount", def.world.buildings.size()}};
}

std::string SessionName(uint64_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "s-%06llu",
                static_cast<unsigned long long>(n));
  return buf;
}

}  // namespace

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIllegalAction:
      return 409;
    case ErrorCode::kGameOver:
      return 410;
    case ErrorCode::kParseError:
    case ErrorCode::kMalformedWarrant:
    case ErrorCode::kInvalidArgument:
      return 400;
    case ErrorCode::kEntityNotFound:
      return 404;
    default:
      return 500;
  }
}

ApiResponse ErrorResponse(int status, const std::string& code,
                          const std::string& message) {
  return ApiResponse{status,
                     ojson{{"error", ojson{{"code", code},
                                           {"message", message}}}}};
}

GameService::GameService(ServiceOptions options)
    : options_(std::move(options)) {}

void GameService::AddGame(const std::string& id, GameDefinition def) {
  auto game = std::make_unique<Game>();
  game->def = std::move(def);
  game->hash = DefinitionHash(game->def);
  game->engine = std::make_unique<Engine>(game->def, options_.engine);
  std::lock_guard<std::mutex> lock(mu_);
  games_[id] = std::move(game);
}

size_t GameService::LoadDirectory(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    AddGame(file.stem().string(), LoadDefinition(file.string()));
  }
  return files.size();
}

size_t GameService::RestoreSessions() {
  if (options_.session_dir.empty() || !fs::exists(options_.session_dir)) {
    return 0;
  }
  size_t restored = 0;
  for (const auto& entry : fs::directory_iterator(options_.session_dir)) {
    if (entry.path().extension() != ".json") continue;
    json doc = json::parse(ReadTextFile(entry.path().string()));
    SaveFile save = SaveFromJson(doc);
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [id, game] : games_) {
      if (game->hash != save.definition_hash) continue;
      auto session = std::make_shared<Session>();
      session->game = game.get();
      session->game_id = id;
      session->state = RestoreSession(*game->engine, save);
      sessions_[save.session_id] = session;
      unsigned long long n = 0;
      if (std::sscanf(save.session_id.c_str(), "s-%llu", &n) == 1) {
        next_session_ = std::max<uint64_t>(next_session_, n + 1);
      }
      ++restored;
      break;
    }
  }
  return restored;
}

std::vector<std::string> GameService::game_ids() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> ids;
  for (const auto& [id, game] : games_) ids.push_back(id);
  return ids;
}

ApiResponse GameService::ListGames() const {
  std::lock_guard<std::mutex> lock(mu_);
  ojson games = ojson::array();
  for (const auto& [id, game] : games_) {
    games.push_back(GameSummary(id, game->def));
  }
  return ApiResponse{200, ojson{{"games", games}}};
}

ApiResponse GameService::GetGame(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = games_.find(id);
  if (it == games_.end()) {
    return ErrorResponse(404, "NotFound", "unknown game '" + id + "'");
  }
  return ApiResponse{200, GameSummary(id, it->second->def)};
}

ApiResponse GameService::CreateSession(const json& request) {
  if (!request.is_object() || !request.contains("gameId") ||
      !request["gameId"].is_string()) {
    return ErrorResponse(400, "ParseError", "body must carry a gameId string");
  }
  std::string game_id = request["gameId"];
  std::shared_ptr<Session> session;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = games_.find(game_id);
    if (it == games_.end()) {
      return ErrorResponse(404, "NotFound", "unknown game '" + game_id + "'");
    }
    session = std::make_shared<Session>();
    session->game = it->second.get();
    session->game_id = game_id;
    std::string id = SessionName(next_session_++);
    session->state = session->game->engine->NewSession(id);
    sessions_[id] = session;
  }
  std::lock_guard<std::mutex> lock(session->mu);
  Persist(*session);
  return ApiResponse{201,
                     ojson{{"sessionId", session->state.session_id},
                           {"gameId", game_id},
                           {"state", StateView(*session->game->engine,
                                               session->state)}}};
}

std::shared_ptr<GameService::Session> GameService::FindSession(
    const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse GameService::GetState(const std::string& session_id) {
  std::shared_ptr<Session> session = FindSession(session_id);
  if (!session) {
    return ErrorResponse(404, "NotFound",
                         "unknown session '" + session_id + "'");
  }
  std::lock_guard<std::mutex> lock(session->mu);
  return ApiResponse{200, StateView(*session->game->engine, session->state)};
}

ApiResponse GameService::PostAction(const std::string& session_id,
                                    const json& request) {
  std::shared_ptr<Session> session = FindSession(session_id);
  if (!session) {
    return ErrorResponse(404, "NotFound",
                         "unknown session '" + session_id + "'");
  }
  std::lock_guard<std::mutex> lock(session->mu);
  try {
    Action action = ActionFromJson(request);
    std::vector<Event> events =
        session->game->engine->Apply(session->state, action);
    Persist(*session);
    ojson list = ojson::array();
    for (const Event& e : events) list.push_back(EventToJson(e));
    return ApiResponse{200,
                       ojson{{"events", list},
                             {"state", StateView(*session->game->engine,
                                                 session->state)}}};
  } catch (const Error& e) {
    return ErrorResponse(StatusFor(e.code()),
                         std::string(ErrorCodeName(e.code())), e.what());
  }
}

ApiResponse GameService::GetSave(const std::string& session_id) {
  std::shared_ptr<Session> session = FindSession(session_id);
  if (!session) {
    return ErrorResponse(404, "NotFound",
                         "unknown session '" + session_id + "'");
  }
  std::lock_guard<std::mutex> lock(session->mu);
  return ApiResponse{200, SaveToJson(SaveFile{session->state.session_id,
                                              session->game->hash,
                                              session->state.log})};
}

void GameService::Persist(const Session& session) const {
  if (options_.session_dir.empty()) return;
  fs::create_directories(options_.session_dir);
  fs::path target =
      fs::path(options_.session_dir) / (session.state.session_id + ".json");
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << SaveToJson(SaveFile{session.state.session_id, session.game->hash,
                               session.state.log})
               .dump(2)
        << "\n";
  }
  fs::rename(tmp, target);
}

ApiResponse GameService::Handle(const std::string& method,
                                const std::string& path,
                                const std::string& body) {
  static const std::regex kGame(R"(^/v1/games/([^/]+)$)");
  static const std::regex kState(R"(^/v1/sessions/([^/]+)/state$)");
  static const std::regex kActions(R"(^/v1/sessions/([^/]+)/actions$)");
  static const std::regex kSave(R"(^/v1/sessions/([^/]+)/save$)");
  std::smatch m;
  json request;
  if (method == "POST") {
    try {
      request = body.empty() ? json::object() : json::parse(body);
    } catch (const json::parse_error& e) {
      return ErrorResponse(400, "ParseError", e.what());
    }
  }
  if (method == "GET" && path == "/v1/games") return ListGames();
  if (method == "GET" && std::regex_match(path, m, kGame)) {
    return GetGame(m[1]);
  }
  if (method == "POST" && path == "/v1/sessions") {
    return CreateSession(request);
  }
  if (method == "GET" && std::regex_match(path, m, kState)) {
    return GetState(m[1]);
  }
  if (method == "POST" && std::regex_match(path, m, kActions)) {
    return PostAction(m[1], request);
  }
  if (method == "GET" && std::regex_match(path, m, kSave)) {
    return GetSave(m[1]);
  }
  return ErrorResponse(404, "NotFound", method + " " + path);
}

struct HttpServer::Impl {
  explicit Impl(GameService& s) : service(s) {
    auto handler = [this](const httplib::Request& req,
                          httplib::Response& res) {
      ApiResponse r = service.Handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json");
    };
    server.Get(".*", handler);
    server.Post(".*", handler);
  }

  GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service)
    : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() = default;

bool HttpServer::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int HttpServer::BindAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace mystery

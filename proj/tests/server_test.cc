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

#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include "httplib.h"
#include "mystery/solver.h"
#include "test_support.h"

namespace mystery {
namespace {

using nlohmann::json;

json Body(const ApiResponse& r) { return json::parse(r.body.dump()); }

std::string NewSession(GameService& service, const std::string& game) {
  ApiResponse r = service.Handle("POST", "/v1/sessions",
                                 json{{"gameId", game}}.dump());
  EXPECT_EQ(r.status, 201);
  return r.body["sessionId"];
}

TEST(GameServiceTest, ListsAndDescribesGames) {
  GameService service;
  service.AddGame("tiny", testing::TinyGame(1));
  service.AddGame("gandhi", testing::GandhiGame(1));
  ApiResponse list = service.Handle("GET", "/v1/games", "");
  ASSERT_EQ(list.status, 200);
  ASSERT_EQ(list.body["games"].size(), 2u);
  EXPECT_EQ(list.body["games"][0]["id"], "gandhi");
  EXPECT_EQ(list.body["games"][1]["id"], "tiny");

  ApiResponse one = service.Handle("GET", "/v1/games/tiny", "");
  ASSERT_EQ(one.status, 200);
  EXPECT_EQ(one.body["victim"], "Vera Victim");
  EXPECT_EQ(one.body["suspects"].size(), 2u);
  EXPECT_FALSE(one.body.contains("solution"));
  EXPECT_EQ(service.Handle("GET", "/v1/games/nope", "").status, 404);
}

TEST(GameServiceTest, RejectsInvalidDefinitions) {
  GameService service;
  GameDefinition def = testing::TinyGame(1);
  def.world.start_city.clear();
  try {
    service.AddGame("bad", def);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDefinition);
  }
  EXPECT_TRUE(service.game_ids().empty());
}

TEST(GameServiceTest, ErrorStatuses) {
  GameService service;
  service.AddGame("tiny", testing::TinyGame(1));
  EXPECT_EQ(service.Handle("GET", "/v1/sessions/s-999/state", "").status, 404);
  EXPECT_EQ(service.Handle("GET", "/v1/unknown", "").status, 404);
  EXPECT_EQ(service.Handle("POST", "/v1/sessions", "{oops").status, 400);
  EXPECT_EQ(service.Handle("POST", "/v1/sessions", "{}").status, 400);
  EXPECT_EQ(service.Handle("POST", "/v1/sessions",
                           json{{"gameId", "nope"}}.dump())
                .status,
            404);

  std::string id = NewSession(service, "tiny");
  std::string actions = "/v1/sessions/" + id + "/actions";
  ApiResponse bad = service.Handle("POST", actions, R"({"type":"Fly"})");
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.body["error"]["code"], "ParseError");

  ApiResponse illegal = service.Handle(
      "POST", actions, R"({"type":"Observe","object":"npc-999"})");
  EXPECT_EQ(illegal.status, 409);
  EXPECT_EQ(illegal.body["error"]["code"], "IllegalAction");

  GameDefinition def = testing::TinyGame(1);
  Warrant wrong;
  for (const EntityRef& s : def.solution.suspects) {
    if (s.iri != def.solution.culprit.iri) wrong.accused = s.iri;
  }
  Action warrant{ActionType::kIssueWarrant};
  warrant.warrant = wrong;
  ApiResponse malformed =
      service.Handle("POST", actions, ActionToJson(warrant).dump());
  EXPECT_EQ(malformed.status, 400);
  EXPECT_EQ(malformed.body["error"]["code"], "MalformedWarrant");
}

TEST(GameServiceTest, ApiPlaythroughMatchesInProcessEngine) {
  GameDefinition def = testing::EinsteinGame(3);
  Playthrough run = AutoSolve(def);
  Engine engine(def);
  GameState local = engine.NewSession("s-000001");

  GameService service;
  service.AddGame("einstein", def);
  std::string id = NewSession(service, "einstein");
  ASSERT_EQ(id, "s-000001");
  std::string actions = "/v1/sessions/" + id + "/actions";
  for (const Action& a : run.actions) {
    ApiResponse r = service.Handle("POST", actions, ActionToJson(a).dump());
    ASSERT_EQ(r.status, 200) << r.body.dump();
    std::vector<Event> events = engine.Apply(local, a);
    ASSERT_EQ(r.body["events"].size(), events.size());
    for (size_t i = 0; i < events.size(); ++i) {
      EXPECT_EQ(r.body["events"][i], EventToJson(events[i]));
    }
    EXPECT_EQ(Body(r)["state"], json::parse(StateView(engine, local).dump()));
  }
  ApiResponse state = service.Handle("GET", "/v1/sessions/" + id + "/state", "");
  EXPECT_EQ(state.body["outcome"], "Won");

  ApiResponse after =
      service.Handle("POST", actions, ActionToJson(run.actions[0]).dump());
  EXPECT_EQ(after.status, 410);
  EXPECT_EQ(after.body["error"]["code"], "GameOver");

  ApiResponse save = service.Handle("GET", "/v1/sessions/" + id + "/save", "");
  ASSERT_EQ(save.status, 200);
  SaveFile file = SaveFromJson(Body(save));
  EXPECT_EQ(file.definition_hash, DefinitionHash(def));
  EXPECT_EQ(RestoreSession(engine, file), local);
}

TEST(GameServiceTest, SessionsSurviveRestart) {
  std::string dir = testing::TempDir("sessions");
  GameDefinition def = testing::GandhiGame(2);
  Playthrough run = AutoSolve(def);
  size_t half = run.actions.size() / 2;
  std::string id;
  json before;
  {
    GameService service(ServiceOptions{dir, {}});
    service.AddGame("gandhi", def);
    id = NewSession(service, "gandhi");
    for (size_t i = 0; i < half; ++i) {
      ASSERT_EQ(service
                    .Handle("POST", "/v1/sessions/" + id + "/actions",
                            ActionToJson(run.actions[i]).dump())
                    .status,
                200);
    }
    before = Body(service.Handle("GET", "/v1/sessions/" + id + "/state", ""));
  }
  EXPECT_TRUE(std::filesystem::exists(dir + "/" + id + ".json"));

  GameService service(ServiceOptions{dir, {}});
  service.AddGame("gandhi", def);
  service.AddGame("other", testing::GandhiGame(3));
  EXPECT_EQ(service.RestoreSessions(), 1u);
  EXPECT_EQ(Body(service.Handle("GET", "/v1/sessions/" + id + "/state", "")),
            before);
  std::string next = NewSession(service, "gandhi");
  EXPECT_NE(next, id);
  for (size_t i = half; i < run.actions.size(); ++i) {
    ASSERT_EQ(service
                  .Handle("POST", "/v1/sessions/" + id + "/actions",
                          ActionToJson(run.actions[i]).dump())
                  .status,
              200);
  }
  EXPECT_EQ(service.Handle("GET", "/v1/sessions/" + id + "/state", "")
                .body["outcome"],
            "Won");
}

TEST(GameServiceTest, LoadsDefinitionDirectory) {
  std::string dir = testing::TempDir("games");
  SaveDefinition(testing::TinyGame(1), dir + "/b.json");
  SaveDefinition(testing::TinyGame(2), dir + "/a.json");
  GameService service;
  EXPECT_EQ(service.LoadDirectory(dir), 2u);
  EXPECT_EQ(service.game_ids(), (std::vector<std::string>{"a", "b"}));
}

TEST(HttpServerTest, ServesTheApiOverHttp) {
  GameDefinition def = testing::TinyGame(4);
  Playthrough run = AutoSolve(def);
  GameService service;
  service.AddGame("tiny", def);
  HttpServer server(service);
  int port = server.BindAnyPort("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread thread([&] { server.ListenAfterBind(); });
  server.WaitUntilReady();

  httplib::Client client("127.0.0.1", port);
  auto games = client.Get("/v1/games");
  ASSERT_TRUE(games);
  EXPECT_EQ(games->status, 200);
  EXPECT_EQ(games->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(json::parse(games->body)["games"][0]["id"], "tiny");

  auto created = client.Post("/v1/sessions", R"({"gameId":"tiny"})",
                             "application/json");
  ASSERT_TRUE(created);
  ASSERT_EQ(created->status, 201);
  std::string id = json::parse(created->body)["sessionId"];
  for (const Action& a : run.actions) {
    auto r = client.Post("/v1/sessions/" + id + "/actions",
                         ActionToJson(a).dump(), "application/json");
    ASSERT_TRUE(r);
    ASSERT_EQ(r->status, 200) << r->body;
  }
  auto state = client.Get("/v1/sessions/" + id + "/state");
  ASSERT_TRUE(state);
  EXPECT_EQ(json::parse(state->body)["outcome"], "Won");
  auto missing = client.Get("/v1/sessions/zzz/state");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.Stop();
  thread.join();
}

}  // namespace
}  // namespace mystery

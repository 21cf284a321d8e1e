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

#ifndef MYSTERY_ENGINE_H_
#define MYSTERY_ENGINE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mystery/game_definition.h"

namespace mystery {

enum class ActionType {
  kTravelTo,
  kEnterBuilding,
  kObserve,
  kTalk,
  kTakeItem,
  kUseKey,
  kIssueWarrant
};

std::string_view ActionTypeName(ActionType type);

struct WarrantEvidence {
  std::string characteristic;
  std::string value;

  auto operator<=>(const WarrantEvidence&) const = default;
};

// Suspects are identified by entity iri.
struct Warrant {
  std::string accused;
  std::map<std::string, WarrantEvidence> evidence;

  auto operator<=>(const Warrant&) const = default;
};

struct Action {
  ActionType type = ActionType::kIssueWarrant;
  // City, building, observed object, npc, item or key depending on type.
  std::string target;
  // Dialog node for Talk, building for UseKey.
  std::string secondary;
  std::optional<Warrant> warrant;

  auto operator<=>(const Action&) const = default;

  static Action TravelTo(std::string city);
  static Action EnterBuilding(std::string building);
  static Action Observe(std::string object);
  static Action Talk(std::string npc, std::string node);
  static Action TakeItem(std::string item);
  static Action UseKey(std::string key, std::string building);
  static Action IssueWarrant(Warrant warrant);
};

nlohmann::ordered_json ActionToJson(const Action& action);
// Throws kParseError describing the malformed field.
Action ActionFromJson(const nlohmann::json& doc);
std::string DescribeAction(const Action& action);

struct Event {
  // revealed, traveled, entered, observed, said, evidence, itemTaken,
  // unlocked, verdict, outcome.
  std::string type;
  std::string id;
  std::string label;
  std::string text;
  std::vector<std::string> reasons;

  bool operator==(const Event&) const = default;
};

nlohmann::ordered_json EventToJson(const Event& event);

enum class Outcome { kInProgress, kWon, kLost };
std::string_view OutcomeName(Outcome outcome);

struct GameState {
  std::string session_id;
  RevealState reveal;
  std::set<std::string> visited_dialog;
  std::set<std::string> observed;
  std::set<std::string> inventory;
  std::set<std::string> unlocked;
  std::set<EvidenceTriple> discovered_evidence;
  std::string current_city;
  std::string current_building;
  Outcome outcome = Outcome::kInProgress;
  int warrants_issued = 0;
  std::vector<Action> log;
  std::vector<Event> events;

  bool operator==(const GameState&) const = default;
};

struct SuspectVerdict {
  std::string suspect;
  bool accepted = false;
  std::string reason;
};

struct WarrantResult {
  Outcome outcome = Outcome::kLost;
  bool culprit_correct = false;
  std::vector<SuspectVerdict> verdicts;
  // Every failing check, empty when won.
  std::vector<std::string> reasons;
};

// Checks coverage first: throws kMalformedWarrant unless the evidence names
// exactly the non-accused suspects.
WarrantResult EvaluateWarrant(const GameDefinition& def,
                              const Warrant& warrant);

struct EngineOptions {
  // Lets a lost warrant be followed by another attempt.
  bool allow_retry = false;
};

class Engine {
 public:
  // Throws kInvalidDefinition when `def` fails validation.
  explicit Engine(const GameDefinition& def, EngineOptions options = {});
  // Skips validation; for callers that already validated.
  static Engine Trusted(const GameDefinition& def, EngineOptions options = {});

  GameState NewSession(const std::string& session_id) const;

  // Throws kGameOver once the outcome is decided.
  std::vector<Action> AvailableActions(const GameState& state) const;
  bool IsAvailable(const GameState& state, const Action& action) const;

  // Applies a legal action and returns the events it produced, which are
  // also appended to state.events. Throws kIllegalAction or kGameOver.
  std::vector<Event> Apply(GameState& state, const Action& action) const;

  const GameDefinition& definition() const { return *def_; }

  // Dialog nodes the player may select for `npc`.
  std::vector<std::string> TalkChoices(const GameState& state,
                                       const std::string& npc) const;
  bool CanEnter(const GameState& state, const std::string& building) const;

 private:
  Engine(const GameDefinition& def, EngineOptions options, bool validate);

  void Reveal(GameState& state, const std::string& id,
              std::vector<Event>& events) const;
  void VisitDialog(GameState& state, const DialogTree& tree,
                   const std::string& node_id,
                   std::vector<Event>& events) const;

  const GameDefinition* def_;
  EngineOptions options_;
};

// Replays a log from a fresh session.
GameState Replay(const Engine& engine, const std::string& session_id,
                 const std::vector<Action>& log);

// Replay-based persistence.
struct SaveFile {
  std::string session_id;
  std::string definition_hash;
  std::vector<Action> actions;
};
nlohmann::ordered_json SaveToJson(const SaveFile& save);
SaveFile SaveFromJson(const nlohmann::json& doc);
// Throws kInvalidDefinition when the hash does not match `engine`'s game.
GameState RestoreSession(const Engine& engine, const SaveFile& save);

// Projection of a session the player is allowed to see: revealed objects
// only and never the solution.
nlohmann::ordered_json StateView(const Engine& engine, const GameState& state);

}  // namespace mystery

#endif  // MYSTERY_ENGINE_H_

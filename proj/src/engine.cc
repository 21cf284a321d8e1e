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

#include "mystery/engine.h"

#include <algorithm>

#include "mystery/errors.h"
#include "mystery/validator.h"

namespace mystery {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr std::array<std::string_view, 7> kActionNames = {
    "TravelTo", "EnterBuilding", "Observe",    "Talk",
    "TakeItem", "UseKey",        "IssueWarrant"};

std::string_view ObjectKindName(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::kCity:
      return "City";
    case ObjectKind::kBuilding:
      return "Building";
    case ObjectKind::kNpc:
      return "NPC";
    case ObjectKind::kItem:
      return "Item";
    case ObjectKind::kDialogNode:
      return "DialogNode";
    case ObjectKind::kUnknown:
      break;
  }
  return "Unknown";
}

[[noreturn]] void Illegal(const Action& action, const std::string& why) {
  throw Error(ErrorCode::kIllegalAction, DescribeAction(action) + ": " + why);
}

std::string FieldString(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw Error(ErrorCode::kParseError,
                std::string("action field '") + key + "' must be a string");
  }
  return doc[key].get<std::string>();
}

const Characteristics& ValuesOf(const SuspectPuzzle& p,
                                const std::string& iri) {
  static const Characteristics kEmpty;
  auto it = p.suspect_values.find(iri);
  return it == p.suspect_values.end() ? kEmpty : it->second;
}

std::string LabelOf(const SuspectPuzzle& p, const std::string& iri) {
  for (const auto& s : p.suspects) {
    if (s.iri == iri) return s.label;
  }
  return iri;
}

}  // namespace

std::string_view ActionTypeName(ActionType type) {
  return kActionNames[static_cast<size_t>(type)];
}

Action Action::TravelTo(std::string city) {
  return Action{ActionType::kTravelTo, std::move(city), "", std::nullopt};
}
Action Action::EnterBuilding(std::string building) {
  return Action{ActionType::kEnterBuilding, std::move(building), "",
                std::nullopt};
}
Action Action::Observe(std::string object) {
  return Action{ActionType::kObserve, std::move(object), "", std::nullopt};
}
Action Action::Talk(std::string npc, std::string node) {
  return Action{ActionType::kTalk, std::move(npc), std::move(node),
                std::nullopt};
}
Action Action::TakeItem(std::string item) {
  return Action{ActionType::kTakeItem, std::move(item), "", std::nullopt};
}
Action Action::UseKey(std::string key, std::string building) {
  return Action{ActionType::kUseKey, std::move(key), std::move(building),
                std::nullopt};
}
Action Action::IssueWarrant(Warrant warrant) {
  return Action{ActionType::kIssueWarrant, "", "", std::move(warrant)};
}

ojson ActionToJson(const Action& action) {
  ojson out{{"type", ActionTypeName(action.type)}};
  switch (action.type) {
    case ActionType::kTravelTo:
      out["city"] = action.target;
      break;
    case ActionType::kEnterBuilding:
      out["building"] = action.target;
      break;
    case ActionType::kObserve:
      out["object"] = action.target;
      break;
    case ActionType::kTalk:
      out["npc"] = action.target;
      out["node"] = action.secondary;
      break;
    case ActionType::kTakeItem:
      out["item"] = action.target;
      break;
    case ActionType::kUseKey:
      out["key"] = action.target;
      out["building"] = action.secondary;
      break;
    case ActionType::kIssueWarrant:
      if (action.warrant) {
        ojson evidence = ojson::object();
        for (const auto& [suspect, e] : action.warrant->evidence) {
          evidence[suspect] = ojson{{"characteristic", e.characteristic},
                                    {"value", e.value}};
        }
        out["accused"] = action.warrant->accused;
        out["evidence"] = evidence;
      }
      break;
  }
  return out;
}

Action ActionFromJson(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "action must be an object");
  }
  std::string type = FieldString(doc, "type");
  if (type == "TravelTo") return Action::TravelTo(FieldString(doc, "city"));
  if (type == "EnterBuilding") {
    return Action::EnterBuilding(FieldString(doc, "building"));
  }
  if (type == "Observe") return Action::Observe(FieldString(doc, "object"));
  if (type == "Talk") {
    return Action::Talk(FieldString(doc, "npc"), FieldString(doc, "node"));
  }
  if (type == "TakeItem") return Action::TakeItem(FieldString(doc, "item"));
  if (type == "UseKey") {
    return Action::UseKey(FieldString(doc, "key"),
                          FieldString(doc, "building"));
  }
  if (type == "IssueWarrant") {
    Warrant warrant;
    warrant.accused = FieldString(doc, "accused");
    if (!doc.contains("evidence") || !doc["evidence"].is_object()) {
      throw Error(ErrorCode::kParseError, "warrant evidence must be an object");
    }
    for (const auto& [suspect, e] : doc["evidence"].items()) {
      if (!e.is_object()) {
        throw Error(ErrorCode::kParseError,
                    "warrant evidence for " + suspect + " must be an object");
      }
      warrant.evidence[suspect] = WarrantEvidence{
          FieldString(e, "characteristic"), FieldString(e, "value")};
    }
    return Action::IssueWarrant(std::move(warrant));
  }
  throw Error(ErrorCode::kParseError, "unknown action type '" + type + "'");
}

std::string DescribeAction(const Action& action) {
  std::string out(ActionTypeName(action.type));
  if (!action.target.empty()) out += " " + action.target;
  if (!action.secondary.empty()) out += " " + action.secondary;
  if (action.warrant) out += " accusing " + action.warrant->accused;
  return out;
}

ojson EventToJson(const Event& event) {
  ojson out{{"type", event.type}, {"id", event.id}, {"label", event.label}};
  if (!event.text.empty()) out["text"] = event.text;
  if (!event.reasons.empty()) out["reasons"] = event.reasons;
  return out;
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kInProgress:
      return "InProgress";
    case Outcome::kWon:
      return "Won";
    case Outcome::kLost:
      return "Lost";
  }
  return "InProgress";
}

WarrantResult EvaluateWarrant(const GameDefinition& def,
                              const Warrant& warrant) {
  const SuspectPuzzle& p = def.solution;
  std::set<std::string> expected;
  bool accused_known = false;
  for (const auto& s : p.suspects) {
    if (s.iri == warrant.accused) {
      accused_known = true;
    } else {
      expected.insert(s.iri);
    }
  }
  if (!accused_known) {
    throw Error(ErrorCode::kMalformedWarrant,
                "accused '" + warrant.accused + "' is not a suspect");
  }
  std::set<std::string> given;
  for (const auto& [suspect, e] : warrant.evidence) given.insert(suspect);
  if (given != expected) {
    std::string detail;
    for (const auto& s : expected) {
      if (!given.count(s)) detail += " missing " + s + ";";
    }
    for (const auto& s : given) {
      if (!expected.count(s)) detail += " unexpected " + s + ";";
    }
    throw Error(ErrorCode::kMalformedWarrant,
                "evidence must cover every other suspect exactly:" + detail);
  }

  WarrantResult result;
  result.culprit_correct = warrant.accused == p.culprit.iri;
  if (!result.culprit_correct) {
    result.reasons.push_back(LabelOf(p, warrant.accused) +
                             " is not the culprit");
  }
  const Characteristics& culprit = ValuesOf(p, p.culprit.iri);
  for (const auto& [suspect, e] : warrant.evidence) {
    SuspectVerdict verdict{suspect, false, ""};
    const Characteristics& held = ValuesOf(p, suspect);
    auto own = held.find(e.characteristic);
    auto theirs = culprit.find(e.characteristic);
    const std::string who = LabelOf(p, suspect);
    if (own == held.end() || !own->second.count(e.value)) {
      verdict.reason = who + " does not have " + e.characteristic + " = " +
                       e.value;
    } else if (theirs != culprit.end() && theirs->second.count(e.value)) {
      verdict.reason = "the culprit also has " + e.characteristic + " = " +
                       e.value + ", so it does not clear " + who;
    } else {
      verdict.accepted = true;
    }
    if (!verdict.accepted) result.reasons.push_back(verdict.reason);
    result.verdicts.push_back(std::move(verdict));
  }
  result.outcome = result.reasons.empty() ? Outcome::kWon : Outcome::kLost;
  return result;
}

Engine::Engine(const GameDefinition& def, EngineOptions options)
    : Engine(def, options, true) {}

Engine::Engine(const GameDefinition& def, EngineOptions options,
               bool validate)
    : def_(&def), options_(options) {
  if (validate) {
    ValidationReport report = ValidateDefinition(def);
    if (!report.ok()) {
      throw Error(ErrorCode::kInvalidDefinition, report.ToString());
    }
  }
}

Engine Engine::Trusted(const GameDefinition& def, EngineOptions options) {
  return Engine(def, options, false);
}

GameState Engine::NewSession(const std::string& session_id) const {
  GameState state;
  state.session_id = session_id;
  std::vector<Event> events;
  for (const std::string& id : def_->world.initial) Reveal(state, id, events);
  state.events = std::move(events);
  return state;
}

void Engine::Reveal(GameState& state, const std::string& id,
                    std::vector<Event>& events) const {
  const World& world = def_->world;
  for (const std::string& shown : Activate(world, state.reveal, id)) {
    events.push_back(Event{"revealed", shown, world.Label(shown),
                           std::string(ObjectKindName(world.KindOf(shown))),
                           {}});
  }
}

void Engine::VisitDialog(GameState& state, const DialogTree& tree,
                         const std::string& node_id,
                         std::vector<Event>& events) const {
  if (!state.visited_dialog.insert(node_id).second) return;
  const DialogNode& node = tree.nodes.at(node_id);
  const World& world = def_->world;
  std::string speaker = node.speaker == Speaker::kPlayer
                            ? "Player"
                            : world.npcs.at(tree.npc_id).name;
  events.push_back(Event{"said", node_id, speaker, node.text, {}});
  if (node.evidence && state.discovered_evidence.insert(*node.evidence).second) {
    const EvidenceTriple& e = *node.evidence;
    events.push_back(Event{"evidence", e.suspect.iri, e.suspect.label,
                           e.characteristic + " = " + e.value, {}});
  }
  for (const std::string& target : node.reveal_effects) {
    Reveal(state, target, events);
  }
  for (const std::string& child : node.children) {
    if (tree.nodes.at(child).speaker == Speaker::kNpc) {
      VisitDialog(state, tree, child, events);
    }
  }
}

std::vector<std::string> Engine::TalkChoices(const GameState& state,
                                             const std::string& npc) const {
  std::vector<std::string> out;
  const World& world = def_->world;
  auto it = world.npcs.find(npc);
  if (it == world.npcs.end()) return out;
  auto tree = world.dialogs.find(it->second.dialog_tree_id);
  if (tree == world.dialogs.end()) return out;
  const DialogTree& t = tree->second;
  if (!state.visited_dialog.count(t.root_id)) return {t.root_id};
  // Depth-first in child order so choices appear as authored.
  std::vector<std::string> stack = {t.root_id};
  while (!stack.empty()) {
    std::string id = stack.back();
    stack.pop_back();
    const DialogNode& node = t.nodes.at(id);
    for (auto c = node.children.rbegin(); c != node.children.rend(); ++c) {
      if (state.visited_dialog.count(*c)) {
        stack.push_back(*c);
      } else if (t.nodes.at(*c).speaker == Speaker::kPlayer) {
        out.push_back(*c);
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool Engine::CanEnter(const GameState& state,
                      const std::string& building) const {
  const auto& b = def_->world.buildings.at(building);
  return !b.lock || state.unlocked.count(building) > 0;
}

std::vector<Action> Engine::AvailableActions(const GameState& state) const {
  if (state.outcome != Outcome::kInProgress) {
    throw Error(ErrorCode::kGameOver,
                "session " + state.session_id + " already ended");
  }
  const World& world = def_->world;
  std::vector<Action> out;
  for (const auto& [id, city] : world.cities) {
    if (state.reveal.shown.count(id) && id != state.current_city) {
      out.push_back(Action::TravelTo(id));
    }
  }
  if (!state.current_city.empty()) {
    const City& city = world.cities.at(state.current_city);
    for (const std::string& b : city.buildings) {
      if (b != state.current_building && state.reveal.shown.count(b) &&
          CanEnter(state, b)) {
        out.push_back(Action::EnterBuilding(b));
      }
    }
    for (const std::string& key : state.inventory) {
      const Item& item = world.items.at(key);
      for (const std::string& b : city.buildings) {
        const Building& building = world.buildings.at(b);
        if (state.reveal.shown.count(b) && building.lock &&
            !state.unlocked.count(b) && item.key_type &&
            LockOpenedBy(*item.key_type) == *building.lock) {
          out.push_back(Action::UseKey(key, b));
        }
      }
    }
  }
  if (!state.current_building.empty()) {
    const Building& here = world.buildings.at(state.current_building);
    for (const std::string& npc : here.occupants) {
      if (state.reveal.shown.count(npc) && !state.observed.count(npc)) {
        out.push_back(Action::Observe(npc));
      }
    }
    for (const std::string& item : here.items) {
      if (state.reveal.shown.count(item) && !state.observed.count(item) &&
          !state.inventory.count(item)) {
        out.push_back(Action::Observe(item));
      }
    }
    for (const std::string& npc : here.occupants) {
      if (!state.reveal.shown.count(npc)) continue;
      for (const std::string& node : TalkChoices(state, npc)) {
        out.push_back(Action::Talk(npc, node));
      }
    }
    for (const std::string& item : here.items) {
      if (state.reveal.shown.count(item) && !state.inventory.count(item) &&
          world.items.at(item).kind == ItemKind::kKey) {
        out.push_back(Action::TakeItem(item));
      }
    }
  }
  out.push_back(Action{ActionType::kIssueWarrant, "", "", std::nullopt});
  return out;
}

bool Engine::IsAvailable(const GameState& state, const Action& action) const {
  if (action.type == ActionType::kIssueWarrant) {
    return state.outcome == Outcome::kInProgress && action.warrant.has_value();
  }
  std::vector<Action> actions = AvailableActions(state);
  return std::find(actions.begin(), actions.end(), action) != actions.end();
}

std::vector<Event> Engine::Apply(GameState& state, const Action& action) const {
  if (state.outcome != Outcome::kInProgress) {
    throw Error(ErrorCode::kGameOver,
                "session " + state.session_id + " already ended");
  }
  if (action.type == ActionType::kIssueWarrant && !action.warrant) {
    Illegal(action, "a warrant is required");
  }
  if (!IsAvailable(state, action)) Illegal(action, "not available");

  const World& world = def_->world;
  std::vector<Event> events;
  switch (action.type) {
    case ActionType::kTravelTo:
      state.current_city = action.target;
      state.current_building.clear();
      events.push_back(Event{"traveled", action.target,
                             world.Label(action.target), "", {}});
      break;
    case ActionType::kEnterBuilding: {
      state.current_building = action.target;
      const Building& b = world.buildings.at(action.target);
      events.push_back(Event{"entered", b.id, b.name, b.description, {}});
      break;
    }
    case ActionType::kObserve: {
      state.observed.insert(action.target);
      if (auto npc = world.npcs.find(action.target); npc != world.npcs.end()) {
        events.push_back(Event{"observed", npc->first, npc->second.name,
                               npc->second.description, {}});
      } else {
        const Item& item = world.items.at(action.target);
        events.push_back(Event{"observed", item.id, item.name, item.text, {}});
        for (const std::string& target : item.reveals) {
          Reveal(state, target, events);
        }
      }
      break;
    }
    case ActionType::kTalk: {
      const Npc& npc = world.npcs.at(action.target);
      VisitDialog(state, world.dialogs.at(npc.dialog_tree_id),
                  action.secondary, events);
      break;
    }
    case ActionType::kTakeItem: {
      state.inventory.insert(action.target);
      events.push_back(Event{"itemTaken", action.target,
                             world.Label(action.target), "", {}});
      break;
    }
    case ActionType::kUseKey: {
      state.unlocked.insert(action.secondary);
      events.push_back(Event{"unlocked", action.secondary,
                             world.Label(action.secondary),
                             world.Label(action.target), {}});
      break;
    }
    case ActionType::kIssueWarrant: {
      WarrantResult result = EvaluateWarrant(*def_, *action.warrant);
      ++state.warrants_issued;
      events.push_back(Event{"verdict", action.warrant->accused,
                             LabelOf(def_->solution, action.warrant->accused),
                             std::string(OutcomeName(result.outcome)),
                             result.reasons});
      if (result.outcome == Outcome::kWon || !options_.allow_retry) {
        state.outcome = result.outcome;
        events.push_back(Event{"outcome", "", "",
                               std::string(OutcomeName(result.outcome)), {}});
      }
      break;
    }
  }
  state.log.push_back(action);
  state.events.insert(state.events.end(), events.begin(), events.end());
  return events;
}

GameState Replay(const Engine& engine, const std::string& session_id,
                 const std::vector<Action>& log) {
  GameState state = engine.NewSession(session_id);
  for (const Action& action : log) engine.Apply(state, action);
  return state;
}

ojson SaveToJson(const SaveFile& save) {
  ojson actions = ojson::array();
  for (const Action& a : save.actions) actions.push_back(ActionToJson(a));
  return ojson{{"sessionId", save.session_id},
               {"definitionHash", save.definition_hash},
               {"actions", actions}};
}

SaveFile SaveFromJson(const json& doc) {
  SaveFile save;
  try {
    save.session_id = doc.at("sessionId").get<std::string>();
    save.definition_hash = doc.at("definitionHash").get<std::string>();
    for (const auto& a : doc.at("actions")) {
      save.actions.push_back(ActionFromJson(a));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("save file: ") + e.what());
  }
  return save;
}

GameState RestoreSession(const Engine& engine, const SaveFile& save) {
  std::string hash = DefinitionHash(engine.definition());
  if (hash != save.definition_hash) {
    throw Error(ErrorCode::kInvalidDefinition,
                "save was recorded against definition " +
                    save.definition_hash + ", not " + hash);
  }
  return Replay(engine, save.session_id, save.actions);
}

ojson StateView(const Engine& engine, const GameState& state) {
  const GameDefinition& def = engine.definition();
  const World& world = def.world;
  auto shown = [&](const std::string& id) {
    return state.reveal.shown.count(id) > 0;
  };
  auto shown_list = [&](const std::vector<std::string>& ids) {
    ojson out = ojson::array();
    for (const auto& id : ids) {
      if (shown(id) && !state.inventory.count(id)) out.push_back(id);
    }
    return out;
  };

  ojson suspects = ojson::array();
  for (const auto& s : def.solution.suspects) {
    suspects.push_back(ojson{{"iri", s.iri}, {"label", s.label}});
  }
  ojson cities = ojson::array();
  for (const auto& [id, c] : world.cities) {
    if (!shown(id)) continue;
    cities.push_back(ojson{
        {"id", id},
        {"name", c.name},
        {"coordinates", ojson{{"latitude", c.coordinates.latitude},
                              {"longitude", c.coordinates.longitude}}},
        {"mapRegion", ojson{{"minLatitude", c.map_region.min_latitude},
                            {"minLongitude", c.map_region.min_longitude},
                            {"maxLatitude", c.map_region.max_latitude},
                            {"maxLongitude", c.map_region.max_longitude}}},
        {"buildings", shown_list(c.buildings)}});
  }
  ojson buildings = ojson::array();
  for (const auto& [id, b] : world.buildings) {
    if (!shown(id)) continue;
    ojson o{{"id", id},
            {"name", b.name},
            {"cityId", b.city_id},
            {"backgroundImage", b.background_image},
            {"description", b.description},
            {"locked", b.lock.has_value() && !state.unlocked.count(id)},
            {"occupants", shown_list(b.occupants)},
            {"items", shown_list(b.items)}};
    if (b.lock) o["lock"] = LockTypeName(*b.lock);
    buildings.push_back(std::move(o));
  }
  ojson npcs = ojson::array();
  for (const auto& [id, n] : world.npcs) {
    if (!shown(id)) continue;
    const DialogTree& tree = world.dialogs.at(n.dialog_tree_id);
    ojson transcript = ojson::array();
    for (const auto& [node_id, node] : tree.nodes) {
      if (!state.visited_dialog.count(node_id)) continue;
      transcript.push_back(ojson{
          {"id", node_id},
          {"speaker", node.speaker == Speaker::kPlayer ? "Player" : "NPC"},
          {"text", node.text}});
    }
    ojson choices = ojson::array();
    for (const std::string& c : engine.TalkChoices(state, id)) {
      choices.push_back(ojson{{"id", c}, {"text", tree.nodes.at(c).text}});
    }
    ojson o{{"id", id},
            {"name", n.name},
            {"image", n.image},
            {"buildingId", n.building_id},
            {"observed", state.observed.count(id) > 0},
            {"visited", transcript},
            {"choices", choices}};
    if (state.observed.count(id)) o["description"] = n.description;
    npcs.push_back(std::move(o));
  }
  ojson items = ojson::array();
  ojson inventory = ojson::array();
  for (const auto& [id, it] : world.items) {
    if (!shown(id)) continue;
    ojson o{{"id", id},
            {"name", it.name},
            {"kind", ItemKindName(it.kind)},
            {"image", it.image},
            {"buildingId", it.building_id},
            {"observed", state.observed.count(id) > 0}};
    if (state.observed.count(id)) o["text"] = it.text;
    if (it.key_type) o["keyType"] = KeyTypeName(*it.key_type);
    (state.inventory.count(id) ? inventory : items).push_back(std::move(o));
  }
  ojson evidence = ojson::array();
  for (const auto& e : state.discovered_evidence) {
    evidence.push_back(EvidenceToJson(e));
  }
  ojson actions = ojson::array();
  if (state.outcome == Outcome::kInProgress) {
    for (const Action& a : engine.AvailableActions(state)) {
      actions.push_back(ActionToJson(a));
    }
  }
  return ojson{{"sessionId", state.session_id},
               {"outcome", OutcomeName(state.outcome)},
               {"currentCity", state.current_city},
               {"currentBuilding", state.current_building},
               {"victim", def.metadata.victim},
               {"suspects", suspects},
               {"cities", cities},
               {"buildings", buildings},
               {"npcs", npcs},
               {"items", items},
               {"inventory", inventory},
               {"discoveredEvidence", evidence},
               {"availableActions", actions},
               {"eventCount", state.events.size()}};
}

}  // namespace mystery

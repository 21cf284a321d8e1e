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

#ifndef MYSTERY_WORLD_H_
#define MYSTERY_WORLD_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mystery/knowledge.h"
#include "mystery/paths.h"
#include "mystery/suspects.h"

namespace mystery {

enum class ItemKind { kBook, kList, kLetter, kPhotograph, kKey };
enum class KeyType { kFlashlight, kCrowbar, kKey };
enum class LockType { kDarkness, kChainedGate, kLockedDoor };

std::string_view ItemKindName(ItemKind kind);
ItemKind ParseItemKind(std::string_view name);
std::string_view KeyTypeName(KeyType type);
KeyType ParseKeyType(std::string_view name);
std::string_view LockTypeName(LockType type);
LockType ParseLockType(std::string_view name);

// Fixed flavour table: flashlight/darkness, crowbar/chained gate,
// key/locked door.
LockType LockOpenedBy(KeyType key);
KeyType KeyOpening(LockType lock);
const std::vector<KeyType>& AllKeyTypes();

struct BoundingBox {
  double min_latitude = 0.0;
  double min_longitude = 0.0;
  double max_latitude = 0.0;
  double max_longitude = 0.0;
};

struct City {
  std::string id;
  std::string name;
  std::optional<std::string> entity;
  Coordinates coordinates;
  BoundingBox map_region;
  std::vector<std::string> buildings;
  // Objects made available together with this city when it is activated.
  std::vector<std::string> activates;
  int tree_node = -1;
};

struct Building {
  std::string id;
  std::string name;
  std::string city_id;
  std::optional<std::string> entity;
  std::vector<std::string> occupants;
  std::vector<std::string> items;
  std::optional<LockType> lock;
  std::string background_image;
  std::string description;
  std::vector<std::string> activates;
  int tree_node = -1;
};

enum class NpcRole { kAssociate, kPlot, kSuspect, kCarrier, kRedHerring };
std::string_view NpcRoleName(NpcRole role);
NpcRole ParseNpcRole(std::string_view name);

struct Npc {
  std::string id;
  std::string name;
  std::optional<EntityRef> source;
  std::string description;
  std::string image;
  std::string dialog_tree_id;
  std::string building_id;
  bool is_red_herring = false;
  NpcRole role = NpcRole::kPlot;
  Gender gender = Gender::kUnknown;
  // How this character relates to the previous node, e.g. "one influence".
  std::string relation;
  // Objects this character's dialog must reveal.
  std::vector<std::string> clue_targets;
  int tree_node = -1;
};

struct Item {
  std::string id;
  ItemKind kind = ItemKind::kBook;
  std::optional<EntityRef> source;
  std::string name;
  std::string text;
  std::vector<std::string> revealed_names;
  std::optional<KeyType> key_type;
  std::string building_id;
  std::string image;
  // Objects revealed by observing this item.
  std::vector<std::string> reveals;
  int tree_node = -1;
};

enum class Speaker { kPlayer, kNpc };
enum class DialogTopic { kGreeting, kMain, kBirth, kResidence, kAchievement };
std::string_view DialogTopicName(DialogTopic topic);
DialogTopic ParseDialogTopic(std::string_view name);

struct DialogNode {
  std::string id;
  Speaker speaker = Speaker::kNpc;
  std::string text;
  std::vector<std::string> children;
  std::vector<std::string> reveal_effects;
  // Hidden until the parent has been visited; only the root starts visible.
  bool hidden = true;
  DialogTopic topic = DialogTopic::kMain;
  std::optional<EvidenceTriple> evidence;
};

struct DialogTree {
  std::string id;
  std::string npc_id;
  std::string root_id;
  std::map<std::string, DialogNode> nodes;
  std::vector<std::string> main_branch;
  std::map<DialogTopic, std::vector<std::string>> side_branches;

  // Parent of a node, or empty for the root.
  std::string ParentOf(const std::string& node_id) const;
};

enum class TriggerKind { kTalk, kDialog, kClue, kContain };
std::string_view TriggerKindName(TriggerKind kind);
TriggerKind ParseTriggerKind(std::string_view name);

struct TriggerEdge {
  std::string source;
  std::string target;
  TriggerKind kind = TriggerKind::kDialog;

  auto operator<=>(const TriggerEdge&) const = default;
};

struct TriggerGraph {
  std::vector<TriggerEdge> edges;
  std::vector<std::string> initial;

  bool operator==(const TriggerGraph&) const = default;
};

struct KeyPlacement {
  KeyType key_type = KeyType::kKey;
  std::string building_id;
  int depth = 0;
  std::string item_id;
};

struct LockPlacement {
  LockType lock_type = LockType::kLockedDoor;
  std::string building_id;
  int depth = 0;
};

struct PuzzlePlacement {
  std::vector<KeyPlacement> keys;
  std::vector<LockPlacement> locks;
};

enum class ObjectKind { kCity, kBuilding, kNpc, kItem, kDialogNode, kUnknown };

struct World {
  std::map<std::string, City> cities;
  std::map<std::string, Building> buildings;
  std::map<std::string, Npc> npcs;
  std::map<std::string, Item> items;
  std::map<std::string, DialogTree> dialogs;
  std::string start_city;
  std::string start_building;
  std::vector<std::string> initial;
  PlotTree plot;
  // Cities created from random store places for orphan buildings.
  int random_cities = 0;
  // Plot-tree node id -> the object that materializes it.
  std::map<int, std::string> node_objects;

  ObjectKind KindOf(const std::string& id) const;
  // Dialog node lookup across all trees.
  const DialogNode* FindDialogNode(const std::string& id,
                                   const DialogTree** tree = nullptr) const;
  // Building holding an npc/item, the building itself, or empty.
  std::string BuildingOf(const std::string& id) const;
  std::string CityOf(const std::string& id) const;
  std::string Label(const std::string& id) const;
};

// Tracks which objects the player can see ("shown") and which have been
// activated by a trigger. Activation co-reveals a location's contents;
// showing an object also shows its containers, and showing a building shows
// its ambient contents (keys and red herrings).
struct RevealState {
  std::set<std::string> shown;
  std::set<std::string> activated;

  bool operator==(const RevealState&) const = default;
};

// Activates `id`; returns newly shown object ids in discovery order.
std::vector<std::string> Activate(const World& world, RevealState& state,
                                  const std::string& id);

struct DepthMap {
  // Trigger layer at which each object is first shown.
  std::map<std::string, int> shown;
  // Layer at which each clue dialog node becomes usable.
  std::map<std::string, int> dialog_nodes;
};

// Simulated unobstructed playthrough: layer 0 is the initial set, each
// further layer applies every available clue.
DepthMap SimulateDepths(const World& world);

// Builds the trigger graph from the world's clue data.
TriggerGraph DeriveTriggerGraph(const World& world);

}  // namespace mystery

#endif  // MYSTERY_WORLD_H_

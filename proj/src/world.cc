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

#include "mystery/world.h"

#include <algorithm>
#include <array>
#include <functional>

#include "mystery/errors.h"

namespace mystery {
namespace {

template <typename Enum, size_t N>
std::string_view NameOf(const std::array<std::string_view, N>& names,
                        Enum value) {
  return names[static_cast<size_t>(value)];
}

template <typename Enum, size_t N>
Enum ParseName(const std::array<std::string_view, N>& names,
               std::string_view text, std::string_view what) {
  for (size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  throw Error(ErrorCode::kParseError,
              "unknown " + std::string(what) + " '" + std::string(text) + "'");
}

constexpr std::array<std::string_view, 5> kItemKinds = {
    "Book", "List", "Letter", "Photograph", "Key"};
constexpr std::array<std::string_view, 3> kKeyTypes = {"Flashlight",
                                                       "Crowbar", "Key"};
constexpr std::array<std::string_view, 3> kLockTypes = {
    "Darkness", "ChainedGate", "LockedDoor"};
constexpr std::array<std::string_view, 5> kNpcRoles = {
    "Associate", "Plot", "Suspect", "Carrier", "RedHerring"};
constexpr std::array<std::string_view, 5> kTopics = {
    "Greeting", "Main", "Birth", "Residence", "Achievement"};
constexpr std::array<std::string_view, 4> kTriggerKinds = {
    "Talk", "Dialog", "Clue", "Contain"};

}  // namespace

std::string_view ItemKindName(ItemKind kind) { return NameOf(kItemKinds, kind); }
ItemKind ParseItemKind(std::string_view name) {
  return ParseName<ItemKind>(kItemKinds, name, "item kind");
}
std::string_view KeyTypeName(KeyType type) { return NameOf(kKeyTypes, type); }
KeyType ParseKeyType(std::string_view name) {
  return ParseName<KeyType>(kKeyTypes, name, "key type");
}
std::string_view LockTypeName(LockType type) {
  return NameOf(kLockTypes, type);
}
LockType ParseLockType(std::string_view name) {
  return ParseName<LockType>(kLockTypes, name, "lock type");
}
std::string_view NpcRoleName(NpcRole role) { return NameOf(kNpcRoles, role); }
NpcRole ParseNpcRole(std::string_view name) {
  return ParseName<NpcRole>(kNpcRoles, name, "npc role");
}
std::string_view DialogTopicName(DialogTopic topic) {
  return NameOf(kTopics, topic);
}
DialogTopic ParseDialogTopic(std::string_view name) {
  return ParseName<DialogTopic>(kTopics, name, "dialog topic");
}
std::string_view TriggerKindName(TriggerKind kind) {
  return NameOf(kTriggerKinds, kind);
}
TriggerKind ParseTriggerKind(std::string_view name) {
  return ParseName<TriggerKind>(kTriggerKinds, name, "trigger kind");
}

LockType LockOpenedBy(KeyType key) {
  switch (key) {
    case KeyType::kFlashlight:
      return LockType::kDarkness;
    case KeyType::kCrowbar:
      return LockType::kChainedGate;
    case KeyType::kKey:
      return LockType::kLockedDoor;
  }
  return LockType::kLockedDoor;
}

KeyType KeyOpening(LockType lock) {
  for (KeyType key : AllKeyTypes()) {
    if (LockOpenedBy(key) == lock) return key;
  }
  return KeyType::kKey;
}

const std::vector<KeyType>& AllKeyTypes() {
  static const std::vector<KeyType> kAll = {
      KeyType::kFlashlight, KeyType::kCrowbar, KeyType::kKey};
  return kAll;
}

std::string DialogTree::ParentOf(const std::string& node_id) const {
  for (const auto& [id, node] : nodes) {
    if (std::find(node.children.begin(), node.children.end(), node_id) !=
        node.children.end()) {
      return id;
    }
  }
  return "";
}

ObjectKind World::KindOf(const std::string& id) const {
  if (cities.count(id)) return ObjectKind::kCity;
  if (buildings.count(id)) return ObjectKind::kBuilding;
  if (npcs.count(id)) return ObjectKind::kNpc;
  if (items.count(id)) return ObjectKind::kItem;
  if (FindDialogNode(id)) return ObjectKind::kDialogNode;
  return ObjectKind::kUnknown;
}

const DialogNode* World::FindDialogNode(const std::string& id,
                                        const DialogTree** tree) const {
  // Node ids are "<tree id>/<local>".
  size_t slash = id.rfind('/');
  if (slash == std::string::npos) return nullptr;
  auto it = dialogs.find(id.substr(0, slash));
  if (it == dialogs.end()) return nullptr;
  auto node = it->second.nodes.find(id);
  if (node == it->second.nodes.end()) return nullptr;
  if (tree) *tree = &it->second;
  return &node->second;
}

std::string World::BuildingOf(const std::string& id) const {
  if (auto it = npcs.find(id); it != npcs.end()) return it->second.building_id;
  if (auto it = items.find(id); it != items.end()) {
    return it->second.building_id;
  }
  if (buildings.count(id)) return id;
  return "";
}

std::string World::CityOf(const std::string& id) const {
  if (cities.count(id)) return id;
  std::string building = BuildingOf(id);
  if (auto it = buildings.find(building); it != buildings.end()) {
    return it->second.city_id;
  }
  return "";
}

std::string World::Label(const std::string& id) const {
  if (auto it = cities.find(id); it != cities.end()) return it->second.name;
  if (auto it = buildings.find(id); it != buildings.end()) {
    return it->second.name;
  }
  if (auto it = npcs.find(id); it != npcs.end()) return it->second.name;
  if (auto it = items.find(id); it != items.end()) return it->second.name;
  if (const DialogNode* node = FindDialogNode(id)) return node->text;
  return id;
}

namespace {

class Revealer {
 public:
  Revealer(const World& world, RevealState& state)
      : world_(world), state_(state) {}

  void Activate(const std::string& id) {
    if (!state_.activated.insert(id).second) {
      Show(id);
      return;
    }
    Show(id);
    const std::vector<std::string>* contents = nullptr;
    if (auto it = world_.cities.find(id); it != world_.cities.end()) {
      contents = &it->second.activates;
    } else if (auto b = world_.buildings.find(id); b != world_.buildings.end()) {
      contents = &b->second.activates;
    }
    if (contents) {
      for (const std::string& child : *contents) Activate(child);
    }
  }

  std::vector<std::string> TakeShown() { return std::move(shown_); }

 private:
  void Show(const std::string& id) {
    if (world_.KindOf(id) == ObjectKind::kDialogNode) return;
    if (state_.shown.count(id)) return;
    std::string building = world_.BuildingOf(id);
    std::string city = world_.CityOf(id);
    if (!city.empty() && city != id) Show(city);
    if (!building.empty() && building != id) Show(building);
    state_.shown.insert(id);
    shown_.push_back(id);
    if (auto b = world_.buildings.find(id); b != world_.buildings.end()) {
      ShowAmbient(b->second);
    }
  }

  void ShowAmbient(const Building& building) {
    for (const std::string& item_id : building.items) {
      auto it = world_.items.find(item_id);
      if (it != world_.items.end() && it->second.kind == ItemKind::kKey) {
        Show(item_id);
      }
    }
    for (const std::string& npc_id : building.occupants) {
      auto it = world_.npcs.find(npc_id);
      if (it != world_.npcs.end() && it->second.is_red_herring) Show(npc_id);
    }
  }

  const World& world_;
  RevealState& state_;
  std::vector<std::string> shown_;
};

}  // namespace

std::vector<std::string> Activate(const World& world, RevealState& state,
                                  const std::string& id) {
  Revealer revealer(world, state);
  revealer.Activate(id);
  return revealer.TakeShown();
}

namespace {

// Unobstructed playthrough. `visit(source, layer, shown)` receives the
// objects first shown because `source` fired; initial objects are their own
// source. Returns the layer at which each clue dialog node became usable.
template <typename Visit>
std::map<std::string, int> Playthrough(const World& world, Visit visit) {
  std::map<std::string, int> dialog_nodes;
  std::map<std::string, int> layer_of;
  RevealState state;
  auto run = [&](const std::string& source, const std::string& target,
                 int layer) {
    std::vector<std::string> shown = Activate(world, state, target);
    for (const std::string& id : shown) layer_of.emplace(id, layer);
    visit(source, target, layer, shown);
  };
  for (const std::string& id : world.initial) run(id, id, 0);
  std::set<std::string> applied;
  for (int layer = 1;; ++layer) {
    std::vector<std::pair<std::string, std::string>> fired;
    for (const auto& [id, npc] : world.npcs) {
      if (!state.shown.count(id) || npc.is_red_herring) continue;
      auto tree = world.dialogs.find(npc.dialog_tree_id);
      if (tree == world.dialogs.end()) {
        // Dialog not generated yet: the planned clue stands in for it.
        if (!npc.clue_targets.empty() && applied.insert(id).second) {
          for (const std::string& t : npc.clue_targets) fired.emplace_back(id, t);
        }
        continue;
      }
      for (const auto& [node_id, node] : tree->second.nodes) {
        if (node.reveal_effects.empty()) continue;
        if (!applied.insert(node_id).second) continue;
        dialog_nodes.emplace(node_id, layer_of.at(id));
        for (const std::string& t : node.reveal_effects) {
          fired.emplace_back(node_id, t);
        }
      }
    }
    for (const auto& [id, item] : world.items) {
      if (!state.shown.count(id) || item.reveals.empty()) continue;
      if (!applied.insert(id).second) continue;
      for (const std::string& t : item.reveals) fired.emplace_back(id, t);
    }
    if (fired.empty()) break;
    for (const auto& [source, target] : fired) run(source, target, layer);
  }
  return dialog_nodes;
}

}  // namespace

DepthMap SimulateDepths(const World& world) {
  DepthMap depths;
  depths.dialog_nodes = Playthrough(
      world, [&](const std::string&, const std::string&, int layer,
                 const std::vector<std::string>& shown) {
        for (const std::string& id : shown) depths.shown.emplace(id, layer);
      });
  return depths;
}

TriggerGraph DeriveTriggerGraph(const World& world) {
  TriggerGraph graph;
  graph.initial = world.initial;
  auto add = [&](const std::string& source, const std::string& target,
                 TriggerKind kind) {
    graph.edges.push_back(TriggerEdge{source, target, kind});
  };
  for (const auto& [id, npc] : world.npcs) {
    auto tree = world.dialogs.find(npc.dialog_tree_id);
    if (tree == world.dialogs.end()) {
      for (const std::string& target : npc.clue_targets) {
        add(id, target, TriggerKind::kDialog);
      }
      continue;
    }
    for (const auto& [node_id, node] : tree->second.nodes) {
      if (node.reveal_effects.empty()) continue;
      add(id, node_id, TriggerKind::kTalk);
      for (const std::string& target : node.reveal_effects) {
        add(node_id, target, TriggerKind::kDialog);
      }
    }
  }
  for (const auto& [id, item] : world.items) {
    for (const std::string& target : item.reveals) {
      add(id, target, TriggerKind::kClue);
    }
  }
  for (const auto& [id, city] : world.cities) {
    for (const std::string& target : city.activates) {
      add(id, target, TriggerKind::kContain);
    }
  }
  for (const auto& [id, building] : world.buildings) {
    for (const std::string& target : building.activates) {
      add(id, target, TriggerKind::kContain);
    }
  }
  // Containers and ambient contents shown alongside a trigger's target.
  Playthrough(world, [&](const std::string& source, const std::string& target,
                         int, const std::vector<std::string>& shown) {
    for (const std::string& id : shown) {
      if (id != target && id != source) add(source, id, TriggerKind::kContain);
    }
  });
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()),
                    graph.edges.end());
  return graph;
}

}  // namespace mystery

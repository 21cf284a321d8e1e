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

#include "mystery/worldgen.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>

#include "mystery/errors.h"

namespace mystery {
namespace {

constexpr char kNoInformation[] =
    "There is no information available for this character.";

const std::vector<std::string>& MaleNames() {
  static const std::vector<std::string> kNames = {
      "James", "Vlad",   "Tomas",  "Arthur", "Henry",  "Oscar",
      "Felix", "Hugo",   "Ivan",   "Marcus", "Nils",   "Pavel",
      "Rafael", "Samuel", "Victor", "Walter", "Elliot", "Jonas"};
  return kNames;
}

const std::vector<std::string>& FemaleNames() {
  static const std::vector<std::string> kNames = {
      "Alice", "Beatrice", "Clara", "Dora",  "Edith", "Frida",
      "Greta", "Helena",   "Irene", "Julia", "Lena",  "Marta",
      "Nora",  "Olga",     "Paula", "Rosa",  "Sofia", "Vera"};
  return kNames;
}

const std::vector<std::string>& GenericBuildings() {
  static const std::vector<std::string> kNames = {
      "Library", "Archive", "Museum", "Bookshop", "Post Office"};
  return kNames;
}

const std::vector<std::string>& Landmarks() {
  static const std::vector<std::string> kNames = {
      "Tunnel", "Stadium", "Church", "Train Station",
      "Town Hall", "Market", "Lighthouse", "Observatory"};
  return kNames;
}

std::string FormatId(const char* prefix, size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%03zu", prefix, n);
  return buf;
}

std::string Slug(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

std::string FirstSentence(const std::string& text) {
  size_t end = text.find(". ");
  return end == std::string::npos ? text : text.substr(0, end + 1);
}

// Relation noun for a link predicate, used as "I was one <relation>".
std::string RelationPhrase(const std::string& predicate) {
  static const std::map<std::string, std::string> kKnown = {
      {"influenced", "influence"},       {"influencedBy", "influence"},
      {"doctoralAdvisor", "advisor"},    {"doctoralStudent", "student"},
      {"academicAdvisor", "advisor"},    {"notableStudent", "student"},
      {"spouse", "spouse"},              {"child", "child"},
      {"parent", "parent"},              {"relative", "relative"},
      {"associate", "associate"},        {"partner", "partner"},
      {"colleague", "colleague"},        {"knownFor", "subject of study"},
  };
  if (auto it = kKnown.find(predicate); it != kKnown.end()) return it->second;
  std::string words;
  for (char c : predicate) {
    if (std::isupper(static_cast<unsigned char>(c)) && !words.empty()) {
      words += ' ';
    }
    words += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return words.empty() ? "acquaintance" : words + " connection";
}

BoundingBox RegionAround(const Coordinates& c) {
  constexpr double kHalf = 0.05;
  return BoundingBox{std::max(-90.0, c.latitude - kHalf),
                     std::max(-180.0, c.longitude - kHalf),
                     std::min(90.0, c.latitude + kHalf),
                     std::min(180.0, c.longitude + kHalf)};
}

class WorldBuilder {
 public:
  WorldBuilder(World& world, KnowledgeStore& store, Rng& rng)
      : world_(world), store_(store), rng_(rng) {
    for (const auto& [id, npc] : world_.npcs) used_names_.insert(npc.name);
    for (const auto& [id, city] : world_.cities) {
      if (city.entity && city.tree_node < 0) support_cities_[*city.entity] = id;
    }
  }

  std::string NewCity(const EntityRecord& record, int tree_node) {
    if (auto it = support_cities_.find(record.ref.iri);
        tree_node >= 0 && it != support_cities_.end()) {
      std::string id = it->second;
      world_.cities.at(id).tree_node = tree_node;
      support_cities_.erase(it);
      return id;
    }
    City city;
    city.id = FormatId("city", world_.cities.size() + 1);
    city.name = record.ref.label;
    city.entity = record.ref.iri;
    city.coordinates = record.coordinates.value_or(Coordinates{});
    city.map_region = RegionAround(city.coordinates);
    city.tree_node = tree_node;
    if (tree_node < 0) support_cities_[record.ref.iri] = city.id;
    abstracts_[city.id] = record.abstract.value_or("");
    std::string id = city.id;
    world_.cities.emplace(id, std::move(city));
    return id;
  }

  // City backing `entity` outside the tree, reused when already present.
  std::string SupportCity(const EntityRef& entity) {
    if (auto it = support_cities_.find(entity.iri);
        it != support_cities_.end()) {
      return it->second;
    }
    return NewCity(store_.EntityFacts(entity), -1);
  }

  std::string RandomCity() {
    auto places = store_.PlacesWithCoordinates();
    if (places.empty()) {
      throw Error(ErrorCode::kNoCityAvailable,
                  "the knowledge source has no place with coordinates");
    }
    const EntityRef& pick = rng_.Pick(places);
    if (!support_cities_.count(pick.iri)) ++world_.random_cities;
    return SupportCity(pick);
  }

  std::string NewBuilding(const std::string& name, const std::string& city_id,
                          std::optional<std::string> entity, int tree_node,
                          const std::string& background) {
    Building building;
    building.id = FormatId("bldg", world_.buildings.size() + 1);
    building.name = name;
    building.city_id = city_id;
    building.entity = std::move(entity);
    building.tree_node = tree_node;
    building.background_image = "backgrounds/" + background + ".jpg";
    building.description = FirstSentence(abstracts_[city_id]);
    std::string id = building.id;
    world_.cities.at(city_id).buildings.push_back(id);
    world_.buildings.emplace(id, std::move(building));
    return id;
  }

  std::string HouseOf(const std::string& name, const std::string& city_id) {
    return NewBuilding("House of " + name, city_id, std::nullopt, -1, "house");
  }

  std::string GenericBuilding(const std::string& city_id) {
    const std::string& name = rng_.Pick(GenericBuildings());
    return NewBuilding(name, city_id, std::nullopt, -1, Slug(name));
  }

  std::string Landmark(const std::string& city_id) {
    const std::string& name = rng_.Pick(Landmarks());
    return NewBuilding(name, city_id, std::nullopt, -1, Slug(name));
  }

  std::string RandomName(Gender* gender) {
    bool male = rng_.Chance(0.5);
    *gender = male ? Gender::kMale : Gender::kFemale;
    const auto& names = male ? MaleNames() : FemaleNames();
    std::string name = rng_.Pick(names);
    for (int suffix = 2; used_names_.count(name); ++suffix) {
      name = rng_.Pick(names);
      if (suffix > 8) name += " " + std::to_string(suffix);
    }
    used_names_.insert(name);
    return name;
  }

  std::string NewNpc(Npc npc) {
    npc.id = FormatId("npc", world_.npcs.size() + 1);
    npc.dialog_tree_id = "dlg-" + npc.id;
    used_names_.insert(npc.name);
    std::string id = npc.id;
    world_.buildings.at(npc.building_id).occupants.push_back(id);
    world_.npcs.emplace(id, std::move(npc));
    return id;
  }

  std::string NpcFor(const EntityRecord& record, const std::string& building,
                     NpcRole role, int tree_node) {
    Npc npc;
    npc.name = record.ref.label;
    npc.source = record.ref;
    npc.description = record.abstract.value_or(kNoInformation);
    npc.image = store_.FindImage(record.ref, rng_);
    npc.building_id = building;
    npc.role = role;
    npc.gender = record.gender.value_or(Gender::kUnknown);
    npc.tree_node = tree_node;
    return NewNpc(std::move(npc));
  }

  std::string RandomNpc(const std::string& building, NpcRole role) {
    Npc npc;
    npc.name = RandomName(&npc.gender);
    npc.description = kNoInformation;
    PlaceholderPool pool = store_.Placeholders();
    const auto& images =
        npc.gender == Gender::kMale ? pool.male : pool.female;
    npc.image = !images.empty()          ? rng_.Pick(images)
                : !pool.neutral.empty() ? pool.neutral.front()
                                        : "placeholder-neutral.png";
    npc.building_id = building;
    npc.role = role;
    npc.is_red_herring = role == NpcRole::kRedHerring;
    return NewNpc(std::move(npc));
  }

  std::string NewItem(Item item) {
    item.id = FormatId("item", world_.items.size() + 1);
    std::string id = item.id;
    world_.buildings.at(item.building_id).items.push_back(id);
    world_.items.emplace(id, std::move(item));
    return id;
  }

 private:
  World& world_;
  KnowledgeStore& store_;
  Rng& rng_;
  std::set<std::string> used_names_;
  std::map<std::string, std::string> support_cities_;
  std::map<std::string, std::string> abstracts_;
};

// Coordinate-bearing places linked to `entity`, iri-sorted, each with the
// linking predicate.
std::vector<std::pair<std::string, EntityRef>> LinkedCities(
    const EntityRef& entity, KnowledgeStore& store) {
  std::map<EntityRef, std::string> found;
  for (const Link& link : store.Links(entity)) {
    const EntityRef& other = link.from.iri == entity.iri ? link.to : link.from;
    if (other.iri == entity.iri || found.count(other)) continue;
    EntityRecord record = store.EntityFacts(other);
    if (record.kind == EntityKind::kPlace && record.coordinates) {
      found.emplace(other, link.predicate);
    }
  }
  std::vector<std::pair<std::string, EntityRef>> out;
  for (const auto& [ref, predicate] : found) out.emplace_back(predicate, ref);
  return out;
}

const char* ItemNoun(ItemKind kind) {
  switch (kind) {
    case ItemKind::kBook:
      return "book";
    case ItemKind::kList:
      return "list";
    case ItemKind::kLetter:
      return "letter";
    case ItemKind::kPhotograph:
      return "photograph";
    case ItemKind::kKey:
      return "tool";
  }
  return "item";
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += i + 1 == names.size() ? " and " : ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

NodeClass ClassifyNode(const EntityRecord& record) {
  switch (record.kind) {
    case EntityKind::kPlace:
      return NodeClass::kPlace;
    case EntityKind::kPerson:
      return NodeClass::kPerson;
    case EntityKind::kOther:
      return NodeClass::kOther;
  }
  return NodeClass::kOther;
}

void WorldgenOptions::Validate() const {
  auto check = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " must lie in [0, 1]");
    }
  };
  check(red_herring_rate, "red herring rate");
  check(key_chance, "key chance");
  check(lock_chance, "lock chance");
}

World MaterializeWorld(const PlotTree& tree, KnowledgeStore& store, Rng& rng) {
  tree.Validate();
  World world;
  world.plot = tree;
  WorldBuilder builder(world, store, rng);
  const EntityRef& victim = tree.root().entity;

  // Victim's home city: a linked birth place when known.
  auto victim_places = LinkedCities(victim, store);
  auto birth = std::find_if(victim_places.begin(), victim_places.end(),
                            [](const auto& p) { return p.first == "birthPlace"; });
  if (birth != victim_places.end()) {
    world.start_city = builder.SupportCity(birth->second);
  } else if (!victim_places.empty()) {
    world.start_city = builder.SupportCity(victim_places.front().second);
  } else {
    world.start_city = builder.RandomCity();
  }
  world.start_building = builder.HouseOf(victim.label, world.start_city);
  world.buildings.at(world.start_building).tree_node = 0;
  world.node_objects[0] = world.start_building;

  std::vector<EntityRecord> records(tree.size());
  for (size_t i = 1; i < tree.size(); ++i) {
    records[i] = store.EntityFacts(tree.nodes[i].entity);
  }

  // Cities first so buildings can attach to in-tree cities further down.
  for (size_t i = 1; i < tree.size(); ++i) {
    if (ClassifyNode(records[i]) == NodeClass::kPlace &&
        records[i].coordinates) {
      world.node_objects[i] = builder.NewCity(records[i], static_cast<int>(i));
    }
  }
  for (size_t i = 1; i < tree.size(); ++i) {
    if (ClassifyNode(records[i]) != NodeClass::kPlace ||
        records[i].coordinates) {
      continue;
    }
    std::string city;
    auto linked = LinkedCities(records[i].ref, store);
    for (const auto& [predicate, place] : linked) {
      for (const auto& [node, object] : world.node_objects) {
        const City* c = world.cities.count(object) ? &world.cities.at(object)
                                                   : nullptr;
        if (c && c->entity == place.iri) {
          city = object;
          break;
        }
      }
      if (!city.empty()) break;
    }
    if (city.empty() && !linked.empty()) {
      city = builder.SupportCity(linked.front().second);
    }
    if (city.empty()) city = builder.RandomCity();
    world.node_objects[i] = builder.NewBuilding(
        records[i].ref.label, city, records[i].ref.iri, static_cast<int>(i),
        "building");
  }

  auto nearest_city = [&](int node) {
    for (int p = tree.nodes[node].parent; p >= 0; p = tree.nodes[p].parent) {
      if (p == 0) return world.start_city;
      auto it = world.node_objects.find(p);
      if (it == world.node_objects.end()) continue;
      if (world.cities.count(it->second)) return it->second;
      if (world.buildings.count(it->second)) {
        return world.buildings.at(it->second).city_id;
      }
    }
    return world.start_city;
  };
  auto parent_building = [&](int node) -> std::string {
    int p = tree.nodes[node].parent;
    if (p <= 0) return "";
    auto it = world.node_objects.find(p);
    if (it != world.node_objects.end() && world.buildings.count(it->second)) {
      return it->second;
    }
    return "";
  };

  for (size_t i = 1; i < tree.size(); ++i) {
    int node = static_cast<int>(i);
    const EntityRecord& record = records[i];
    NodeClass cls = ClassifyNode(record);
    if (cls == NodeClass::kPlace) continue;
    std::string host = parent_building(node);
    if (cls == NodeClass::kPerson) {
      if (host.empty()) host = builder.HouseOf(record.ref.label,
                                               nearest_city(node));
      NpcRole role = tree.nodes[i].suspect >= 0 ? NpcRole::kSuspect
                                                : NpcRole::kPlot;
      std::string id = builder.NpcFor(record, host, role, node);
      world.npcs.at(id).relation =
          RelationPhrase(tree.nodes[i].via.predicate);
      world.node_objects[i] = id;
    } else {
      if (host.empty()) host = builder.GenericBuilding(nearest_city(node));
      Item item;
      item.kind = !record.images.empty()
                      ? ItemKind::kPhotograph
                      : rng.Pick(std::vector<ItemKind>{
                            ItemKind::kBook, ItemKind::kList,
                            ItemKind::kLetter});
      item.source = record.ref;
      item.name = record.ref.label;
      item.building_id = host;
      item.image = item.kind == ItemKind::kPhotograph
                       ? record.images.front()
                       : "items/" + std::string(ItemNoun(item.kind)) + ".png";
      item.text = "It is a " + std::string(ItemNoun(item.kind)) + " about " +
                  record.ref.label + ".";
      if (record.abstract) item.text += " " + FirstSentence(*record.abstract);
      item.tree_node = node;
      world.node_objects[i] = builder.NewItem(std::move(item));
    }
  }
  return world;
}

void InjectVictimAssociates(World& world, KnowledgeStore& store, Rng& rng) {
  const PlotTree& tree = world.plot;
  const EntityRef& victim = tree.root().entity;
  std::set<std::string> in_tree;
  for (const PlotNode& node : tree.nodes) in_tree.insert(node.entity.iri);

  std::map<EntityRef, std::string> linked;
  for (const Link& link : store.Links(victim)) {
    const EntityRef& other = link.from.iri == victim.iri ? link.to : link.from;
    if (in_tree.count(other.iri) || linked.count(other)) continue;
    if (store.EntityFacts(other).kind == EntityKind::kPerson) {
      linked.emplace(other, link.predicate);
    }
  }

  WorldBuilder builder(world, store, rng);
  const std::string& house = world.start_building;
  auto next = linked.begin();
  std::vector<std::string> associates;
  for (int leaf : tree.suspect_leaves) {
    std::vector<int> path = tree.PathTo(leaf);
    const std::string& target = world.node_objects.at(path.at(1));
    std::string id;
    if (next != linked.end()) {
      id = builder.NpcFor(store.EntityFacts(next->first), house,
                          NpcRole::kAssociate, -1);
      world.npcs.at(id).relation = RelationPhrase(next->second);
      ++next;
    } else {
      id = builder.RandomNpc(house, NpcRole::kAssociate);
      world.npcs.at(id).relation = "friend of the family";
    }
    world.npcs.at(id).clue_targets = {target};
    associates.push_back(id);
  }
  world.initial = {world.start_city, house};
  world.initial.insert(world.initial.end(), associates.begin(),
                       associates.end());
}

TriggerGraph BuildTriggerGraph(World& world, KnowledgeStore& store, Rng& rng) {
  const PlotTree& tree = world.plot;
  WorldBuilder builder(world, store, rng);
  for (size_t i = 1; i < tree.size(); ++i) {
    const PlotNode& node = tree.nodes[i];
    if (node.children.empty()) continue;
    std::vector<std::string> targets;
    std::vector<std::string> names;
    std::vector<std::string> places;
    std::vector<std::string> contents;
    for (int child : node.children) {
      const std::string& object = world.node_objects.at(child);
      targets.push_back(object);
      names.push_back(tree.nodes[child].entity.label);
      ObjectKind kind = world.KindOf(object);
      if (kind == ObjectKind::kCity || kind == ObjectKind::kBuilding) {
        places.push_back(object);
      } else {
        contents.push_back(object);
      }
    }
    const std::string& self = world.node_objects.at(i);
    switch (world.KindOf(self)) {
      case ObjectKind::kNpc:
        world.npcs.at(self).clue_targets = targets;
        break;
      case ObjectKind::kItem: {
        Item& item = world.items.at(self);
        item.reveals = targets;
        item.revealed_names = names;
        item.text += " It mentions " + JoinNames(names) + ".";
        break;
      }
      case ObjectKind::kCity:
      case ObjectKind::kBuilding: {
        bool is_city = world.cities.count(self) > 0;
        auto& activates = is_city ? world.cities.at(self).activates
                                  : world.buildings.at(self).activates;
        activates.insert(activates.end(), contents.begin(), contents.end());
        if (places.empty()) break;
        std::vector<std::string> place_names;
        for (const std::string& p : places) {
          place_names.push_back(world.Label(p));
        }
        std::string inner = is_city ? builder.Landmark(self) : self;
        std::string carrier;
        if (rng.Chance(0.5)) {
          carrier = builder.RandomNpc(inner, NpcRole::kCarrier);
          world.npcs.at(carrier).clue_targets = places;
          world.npcs.at(carrier).relation = "local of " + node.entity.label;
        } else {
          Item letter;
          letter.kind = ItemKind::kLetter;
          letter.name = "Letter from " + node.entity.label;
          letter.building_id = inner;
          letter.image = "items/letter.png";
          letter.reveals = places;
          letter.revealed_names = place_names;
          letter.text = "It is a letter sent from " + node.entity.label +
                        ". It mentions " + JoinNames(place_names) + ".";
          carrier = builder.NewItem(std::move(letter));
        }
        activates.push_back(carrier);
        break;
      }
      default:
        throw Error(ErrorCode::kUnreachableObject,
                    "tree node " + std::to_string(i) + " has no object");
    }
  }

  DepthMap depths = SimulateDepths(world);
  auto require = [&](const std::string& id) {
    if (!depths.shown.count(id)) {
      throw Error(ErrorCode::kUnreachableObject,
                  id + " (" + world.Label(id) + ") is never revealed");
    }
  };
  for (const auto& [id, c] : world.cities) require(id);
  for (const auto& [id, b] : world.buildings) require(id);
  for (const auto& [id, n] : world.npcs) require(id);
  for (const auto& [id, it] : world.items) require(id);
  return DeriveTriggerGraph(world);
}

void InjectRedHerrings(World& world, double rate, KnowledgeStore& store,
                       Rng& rng) {
  WorldBuilder builder(world, store, rng);
  std::vector<std::string> ids;
  for (const auto& [id, building] : world.buildings) ids.push_back(id);
  for (const std::string& id : ids) {
    if (rng.Chance(rate)) builder.RandomNpc(id, NpcRole::kRedHerring);
  }
}

PuzzlePlacement PlaceLocksAndKeys(World& world, PlacementPolicy& policy) {
  DepthMap depths = SimulateDepths(world);
  std::map<int, std::vector<std::string>> layers;
  for (const auto& [id, building] : world.buildings) {
    auto it = depths.shown.find(id);
    if (it != depths.shown.end()) layers[it->second].push_back(id);
  }

  PuzzlePlacement placement;
  std::vector<LockType> pending;
  for (const auto& [depth, buildings] : layers) {
    if (!pending.empty() && policy.PopLock(depth)) {
      std::vector<std::string> candidates;
      for (const std::string& id : buildings) {
        if (id != world.start_building && !world.buildings.at(id).lock) {
          candidates.push_back(id);
        }
      }
      if (!candidates.empty()) {
        const std::string& target =
            candidates[policy.ChooseBuilding(depth, candidates) %
                       candidates.size()];
        world.buildings.at(target).lock = pending.back();
        placement.locks.push_back(LockPlacement{pending.back(), target, depth});
        pending.pop_back();
      }
    }
    if (policy.PlaceKey(depth)) {
      const std::string& host =
          buildings[policy.ChooseBuilding(depth, buildings) % buildings.size()];
      KeyType type = policy.ChooseKey(depth);
      Item key;
      key.kind = ItemKind::kKey;
      key.key_type = type;
      key.name = std::string(KeyTypeName(type));
      key.building_id = host;
      key.image = "items/" + Slug(key.name) + ".png";
      key.text = "A " + Slug(key.name) + ". It might open something.";
      key.id = FormatId("item", world.items.size() + 1);
      std::string id = key.id;
      world.buildings.at(host).items.push_back(id);
      world.items.emplace(id, std::move(key));
      placement.keys.push_back(KeyPlacement{type, host, depth, id});
      pending.push_back(LockOpenedBy(type));
    }
  }
  return placement;
}

GeneratedWorld GenerateWorld(const PlotTree& tree, KnowledgeStore& store,
                             Rng& rng, const WorldgenOptions& options) {
  options.Validate();
  GeneratedWorld out;
  Rng objects = rng.Fork("world");
  out.world = MaterializeWorld(tree, store, objects);
  Rng associates = rng.Fork("associates");
  InjectVictimAssociates(out.world, store, associates);
  Rng triggers = rng.Fork("triggers");
  BuildTriggerGraph(out.world, store, triggers);
  Rng herrings = rng.Fork("red-herrings");
  InjectRedHerrings(out.world, options.red_herring_rate, store, herrings);
  Rng puzzles = rng.Fork("puzzles");
  RandomPlacementPolicy policy(puzzles, options.key_chance,
                               options.lock_chance);
  out.puzzles = PlaceLocksAndKeys(out.world, policy);
  out.triggers = DeriveTriggerGraph(out.world);
  return out;
}

}  // namespace mystery

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

#include "mystery/game_definition.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "embedded.h"
#include "mystery/errors.h"

namespace mystery {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

template <typename T>
std::vector<T> Sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ojson Strings(const std::vector<std::string>& values) {
  ojson out = ojson::array();
  for (const auto& v : values) out.push_back(v);
  return out;
}

std::vector<std::string> StringsFrom(const json& doc, const char* key) {
  std::vector<std::string> out;
  if (doc.contains(key)) {
    for (const auto& v : doc.at(key)) out.push_back(v.get<std::string>());
  }
  return out;
}

ojson CharacteristicsToJson(const Characteristics& values) {
  ojson out = ojson::object();
  for (const auto& [name, set] : values) {
    ojson list = ojson::array();
    for (const auto& v : set) list.push_back(v);
    out[name] = std::move(list);
  }
  return out;
}

Characteristics CharacteristicsFromJson(const json& doc) {
  Characteristics out;
  for (const auto& [name, list] : doc.items()) {
    auto& set = out[name];
    for (const auto& v : list) set.insert(v.get<std::string>());
  }
  return out;
}

ojson PlotToJson(const PlotTree& tree) {
  ojson nodes = ojson::array();
  for (const PlotNode& node : tree.nodes) {
    ojson children = ojson::array();
    for (int c : node.children) children.push_back(c);
    nodes.push_back(ojson{
        {"id", node.id},
        {"entity", EntityRefToJson(node.entity)},
        {"kind", EntityKindName(node.kind)},
        {"parent", node.parent},
        {"children", children},
        {"via",
         ojson{{"predicate", node.via.predicate},
               {"direction", node.via.direction == EdgeDirection::kForward
                                 ? "forward"
                                 : "backward"},
               {"minor", node.via.minor}}},
        {"sourcePath", node.source_path},
        {"suspect", node.suspect},
        {"major", node.major}});
  }
  ojson leaves = ojson::array();
  for (int leaf : tree.suspect_leaves) leaves.push_back(leaf);
  return ojson{{"nodes", nodes}, {"suspectLeaves", leaves}};
}

PlotTree PlotFromJson(const json& doc) {
  PlotTree tree;
  for (const auto& n : doc.at("nodes")) {
    PlotNode node;
    node.id = n.at("id").get<int>();
    node.entity = EntityRefFromJson(n.at("entity"));
    node.kind = ParseEntityKind(n.at("kind").get<std::string>());
    node.parent = n.at("parent").get<int>();
    node.children = n.at("children").get<std::vector<int>>();
    const json& via = n.at("via");
    node.via.predicate = via.at("predicate").get<std::string>();
    node.via.direction = via.at("direction") == "forward"
                             ? EdgeDirection::kForward
                             : EdgeDirection::kBackward;
    node.via.minor = via.at("minor").get<bool>();
    node.source_path = n.at("sourcePath").get<int>();
    node.suspect = n.at("suspect").get<int>();
    node.major = n.at("major").get<bool>();
    tree.nodes.push_back(std::move(node));
  }
  tree.suspect_leaves = doc.at("suspectLeaves").get<std::vector<int>>();
  return tree;
}

ojson WorldToJson(const World& world) {
  ojson cities = ojson::array();
  for (const auto& [id, c] : world.cities) {
    ojson o{{"id", c.id}, {"name", c.name}};
    if (c.entity) o["entity"] = *c.entity;
    o["coordinates"] = ojson{{"latitude", c.coordinates.latitude},
                             {"longitude", c.coordinates.longitude}};
    o["mapRegion"] = ojson{{"minLatitude", c.map_region.min_latitude},
                           {"minLongitude", c.map_region.min_longitude},
                           {"maxLatitude", c.map_region.max_latitude},
                           {"maxLongitude", c.map_region.max_longitude}};
    o["buildings"] = Strings(c.buildings);
    o["activates"] = Strings(c.activates);
    o["treeNode"] = c.tree_node;
    cities.push_back(std::move(o));
  }
  ojson buildings = ojson::array();
  for (const auto& [id, b] : world.buildings) {
    ojson o{{"id", b.id}, {"name", b.name}, {"cityId", b.city_id}};
    if (b.entity) o["entity"] = *b.entity;
    o["occupants"] = Strings(b.occupants);
    o["items"] = Strings(b.items);
    if (b.lock) o["lock"] = LockTypeName(*b.lock);
    o["backgroundImage"] = b.background_image;
    o["description"] = b.description;
    o["activates"] = Strings(b.activates);
    o["treeNode"] = b.tree_node;
    buildings.push_back(std::move(o));
  }
  ojson npcs = ojson::array();
  for (const auto& [id, n] : world.npcs) {
    ojson o{{"id", n.id}, {"name", n.name}};
    if (n.source) o["sourceEntity"] = EntityRefToJson(*n.source);
    o["description"] = n.description;
    o["image"] = n.image;
    o["dialogTreeId"] = n.dialog_tree_id;
    o["buildingId"] = n.building_id;
    o["isRedHerring"] = n.is_red_herring;
    o["role"] = NpcRoleName(n.role);
    o["gender"] = GenderName(n.gender);
    o["relation"] = n.relation;
    o["clueTargets"] = Strings(n.clue_targets);
    o["treeNode"] = n.tree_node;
    npcs.push_back(std::move(o));
  }
  ojson items = ojson::array();
  for (const auto& [id, it] : world.items) {
    ojson o{{"id", it.id}, {"kind", ItemKindName(it.kind)}};
    if (it.source) o["sourceEntity"] = EntityRefToJson(*it.source);
    o["name"] = it.name;
    o["text"] = it.text;
    o["revealedNames"] = Strings(it.revealed_names);
    if (it.key_type) o["keyType"] = KeyTypeName(*it.key_type);
    o["buildingId"] = it.building_id;
    o["image"] = it.image;
    o["reveals"] = Strings(it.reveals);
    o["treeNode"] = it.tree_node;
    items.push_back(std::move(o));
  }
  ojson node_objects = ojson::array();
  for (const auto& [node, object] : world.node_objects) {
    node_objects.push_back(ojson{{"node", node}, {"object", object}});
  }
  return ojson{{"startCity", world.start_city},
               {"startBuilding", world.start_building},
               {"initial", Strings(world.initial)},
               {"cities", cities},
               {"buildings", buildings},
               {"npcs", npcs},
               {"items", items},
               {"plotTree", PlotToJson(world.plot)},
               {"nodeObjects", node_objects}};
}

ojson DialogsToJson(const World& world) {
  ojson trees = ojson::array();
  for (const auto& [id, tree] : world.dialogs) {
    ojson nodes = ojson::array();
    for (const auto& [node_id, node] : tree.nodes) {
      ojson o{{"id", node.id},
              {"speaker", node.speaker == Speaker::kPlayer ? "Player" : "NPC"},
              {"text", node.text},
              {"children", Strings(node.children)},
              {"revealEffects", Strings(node.reveal_effects)},
              {"hidden", node.hidden},
              {"topic", DialogTopicName(node.topic)}};
      if (node.evidence) o["evidence"] = EvidenceToJson(*node.evidence);
      nodes.push_back(std::move(o));
    }
    ojson side = ojson::object();
    for (const auto& [topic, ids] : tree.side_branches) {
      side[std::string(DialogTopicName(topic))] = Strings(ids);
    }
    trees.push_back(ojson{{"id", tree.id},
                          {"npcId", tree.npc_id},
                          {"rootId", tree.root_id},
                          {"nodes", nodes},
                          {"mainBranch", Strings(tree.main_branch)},
                          {"sideBranches", side}});
  }
  return trees;
}

ojson SolutionToJson(const SuspectPuzzle& p) {
  ojson suspects = ojson::array();
  for (const auto& s : p.suspects) suspects.push_back(EntityRefToJson(s));
  ojson evidence = ojson::array();
  for (const auto& e : p.evidence) evidence.push_back(EvidenceToJson(e));
  ojson connections = ojson::object();
  for (const auto& [iri, text] : p.direct_connections) connections[iri] = text;
  ojson values = ojson::object();
  for (const auto& [iri, table] : p.suspect_values) {
    values[iri] = CharacteristicsToJson(table);
  }
  return ojson{{"victim", EntityRefToJson(p.victim)},
               {"suspects", suspects},
               {"culprit", EntityRefToJson(p.culprit)},
               {"evidence", evidence},
               {"characteristics", Strings(p.characteristics)},
               {"directConnections", connections},
               {"suspectValues", values}};
}

size_t LineOf(std::string_view text, size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

std::string TypeOf(const json& doc) {
  if (doc.is_null()) return "null";
  if (doc.is_boolean()) return "boolean";
  if (doc.is_number_integer()) return "integer";
  if (doc.is_number()) return "number";
  if (doc.is_string()) return "string";
  if (doc.is_array()) return "array";
  return "object";
}

bool TypeMatches(const json& doc, const std::string& type) {
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer();
  return TypeOf(doc) == type;
}

class SchemaChecker {
 public:
  explicit SchemaChecker(const json& root) : root_(root) {}

  void Check(const json& doc, const json& schema, const std::string& path) {
    if (schema.contains("$ref")) {
      const std::string ref = schema["$ref"].get<std::string>();
      const std::string prefix = "#/$defs/";
      if (ref.rfind(prefix, 0) != 0 ||
          !root_["$defs"].contains(ref.substr(prefix.size()))) {
        errors_.push_back(path + ": unresolvable $ref " + ref);
        return;
      }
      Check(doc, root_["$defs"][ref.substr(prefix.size())], path);
      return;
    }
    if (schema.contains("type")) {
      const json& type = schema["type"];
      bool ok = false;
      if (type.is_array()) {
        for (const auto& t : type) ok = ok || TypeMatches(doc, t);
      } else {
        ok = TypeMatches(doc, type.get<std::string>());
      }
      if (!ok) {
        errors_.push_back(path + ": expected " + type.dump() + ", got " +
                          TypeOf(doc));
        return;
      }
    }
    if (schema.contains("enum")) {
      const json& options = schema["enum"];
      if (std::find(options.begin(), options.end(), doc) == options.end()) {
        errors_.push_back(path + ": value " + doc.dump() + " not in " +
                          options.dump());
      }
    }
    if (schema.contains("minimum") && doc.is_number() &&
        doc.get<double>() < schema["minimum"].get<double>()) {
      errors_.push_back(path + ": below minimum " + schema["minimum"].dump());
    }
    if (schema.contains("maximum") && doc.is_number() &&
        doc.get<double>() > schema["maximum"].get<double>()) {
      errors_.push_back(path + ": above maximum " + schema["maximum"].dump());
    }
    if (doc.is_object()) {
      if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
          if (!doc.contains(key.get<std::string>())) {
            errors_.push_back(path + "." + key.get<std::string>() +
                              ": missing");
          }
        }
      }
      const json* props =
          schema.contains("properties") ? &schema["properties"] : nullptr;
      for (const auto& [key, value] : doc.items()) {
        if (props && props->contains(key)) {
          Check(value, (*props)[key], path + "." + key);
        } else if (schema.contains("additionalProperties")) {
          const json& extra = schema["additionalProperties"];
          if (extra.is_boolean() && !extra.get<bool>()) {
            errors_.push_back(path + "." + key + ": unexpected property");
          } else if (extra.is_object()) {
            Check(value, extra, path + "." + key);
          }
        }
      }
    }
    if (doc.is_array()) {
      if (schema.contains("minItems") &&
          doc.size() < schema["minItems"].get<size_t>()) {
        errors_.push_back(path + ": fewer than " +
                          schema["minItems"].dump() + " items");
      }
      if (schema.contains("items")) {
        for (size_t i = 0; i < doc.size(); ++i) {
          Check(doc[i], schema["items"], path + "[" + std::to_string(i) + "]");
        }
      }
    }
  }

  std::vector<std::string> TakeErrors() { return std::move(errors_); }

 private:
  const json& root_;
  std::vector<std::string> errors_;
};

}  // namespace

ojson EntityRefToJson(const EntityRef& ref) {
  return ojson{{"iri", ref.iri}, {"label", ref.label}};
}

EntityRef EntityRefFromJson(const json& doc) {
  return EntityRef{doc.at("iri").get<std::string>(),
                   doc.at("label").get<std::string>()};
}

ojson EvidenceToJson(const EvidenceTriple& triple) {
  return ojson{{"suspect", EntityRefToJson(triple.suspect)},
               {"characteristic", triple.characteristic},
               {"value", triple.value}};
}

EvidenceTriple EvidenceFromJson(const json& doc) {
  return EvidenceTriple{EntityRefFromJson(doc.at("suspect")),
                        doc.at("characteristic").get<std::string>(),
                        doc.at("value").get<std::string>()};
}

ojson DefinitionToJson(const GameDefinition& def) {
  ojson keys = ojson::array();
  for (const auto& k : def.puzzles.keys) {
    keys.push_back(ojson{{"keyType", KeyTypeName(k.key_type)},
                         {"buildingId", k.building_id},
                         {"depth", k.depth},
                         {"itemId", k.item_id}});
  }
  ojson locks = ojson::array();
  for (const auto& l : def.puzzles.locks) {
    locks.push_back(ojson{{"lockType", LockTypeName(l.lock_type)},
                          {"buildingId", l.building_id},
                          {"depth", l.depth}});
  }
  ojson edges = ojson::array();
  for (const auto& e : def.triggers.edges) {
    edges.push_back(ojson{{"source", e.source},
                          {"target", e.target},
                          {"kind", TriggerKindName(e.kind)}});
  }
  const DefinitionMetadata& m = def.metadata;
  return ojson{
      {"version", def.version},
      {"metadata", ojson{{"victim", m.victim},
                         {"victimIri", m.victim_iri},
                         {"seed", m.seed},
                         {"generatorVersion", m.generator_version},
                         {"source", m.source},
                         {"randomCities", m.random_cities}}},
      {"world", WorldToJson(def.world)},
      {"dialogTrees", DialogsToJson(def.world)},
      {"triggerGraph",
       ojson{{"initial", Strings(def.triggers.initial)}, {"edges", edges}}},
      {"puzzles", ojson{{"keys", keys}, {"locks", locks}}},
      {"solution", SolutionToJson(def.solution)}};
}

GameDefinition DefinitionFromJson(const json& doc) {
  GameDefinition def;
  def.version = doc.at("version").get<int>();
  const json& m = doc.at("metadata");
  def.metadata.victim = m.at("victim").get<std::string>();
  def.metadata.victim_iri = m.at("victimIri").get<std::string>();
  def.metadata.seed = m.at("seed").get<uint64_t>();
  def.metadata.generator_version = m.at("generatorVersion").get<std::string>();
  def.metadata.source = m.at("source").get<std::string>();
  def.metadata.random_cities = m.at("randomCities").get<int>();

  World& world = def.world;
  const json& w = doc.at("world");
  world.start_city = w.at("startCity").get<std::string>();
  world.start_building = w.at("startBuilding").get<std::string>();
  world.initial = StringsFrom(w, "initial");
  world.random_cities = def.metadata.random_cities;
  for (const auto& o : w.at("cities")) {
    City c;
    c.id = o.at("id").get<std::string>();
    c.name = o.at("name").get<std::string>();
    if (o.contains("entity")) c.entity = o["entity"].get<std::string>();
    c.coordinates = Coordinates{o.at("coordinates").at("latitude").get<double>(),
                                o.at("coordinates").at("longitude").get<double>()};
    const json& r = o.at("mapRegion");
    c.map_region = BoundingBox{r.at("minLatitude").get<double>(),
                               r.at("minLongitude").get<double>(),
                               r.at("maxLatitude").get<double>(),
                               r.at("maxLongitude").get<double>()};
    c.buildings = StringsFrom(o, "buildings");
    c.activates = StringsFrom(o, "activates");
    c.tree_node = o.at("treeNode").get<int>();
    world.cities.emplace(c.id, std::move(c));
  }
  for (const auto& o : w.at("buildings")) {
    Building b;
    b.id = o.at("id").get<std::string>();
    b.name = o.at("name").get<std::string>();
    b.city_id = o.at("cityId").get<std::string>();
    if (o.contains("entity")) b.entity = o["entity"].get<std::string>();
    b.occupants = StringsFrom(o, "occupants");
    b.items = StringsFrom(o, "items");
    if (o.contains("lock")) b.lock = ParseLockType(o["lock"].get<std::string>());
    b.background_image = o.at("backgroundImage").get<std::string>();
    b.description = o.at("description").get<std::string>();
    b.activates = StringsFrom(o, "activates");
    b.tree_node = o.at("treeNode").get<int>();
    world.buildings.emplace(b.id, std::move(b));
  }
  for (const auto& o : w.at("npcs")) {
    Npc n;
    n.id = o.at("id").get<std::string>();
    n.name = o.at("name").get<std::string>();
    if (o.contains("sourceEntity")) n.source = EntityRefFromJson(o["sourceEntity"]);
    n.description = o.at("description").get<std::string>();
    n.image = o.at("image").get<std::string>();
    n.dialog_tree_id = o.at("dialogTreeId").get<std::string>();
    n.building_id = o.at("buildingId").get<std::string>();
    n.is_red_herring = o.at("isRedHerring").get<bool>();
    n.role = ParseNpcRole(o.at("role").get<std::string>());
    n.gender = ParseGender(o.at("gender").get<std::string>());
    n.relation = o.at("relation").get<std::string>();
    n.clue_targets = StringsFrom(o, "clueTargets");
    n.tree_node = o.at("treeNode").get<int>();
    world.npcs.emplace(n.id, std::move(n));
  }
  for (const auto& o : w.at("items")) {
    Item it;
    it.id = o.at("id").get<std::string>();
    it.kind = ParseItemKind(o.at("kind").get<std::string>());
    if (o.contains("sourceEntity")) it.source = EntityRefFromJson(o["sourceEntity"]);
    it.name = o.at("name").get<std::string>();
    it.text = o.at("text").get<std::string>();
    it.revealed_names = StringsFrom(o, "revealedNames");
    if (o.contains("keyType")) {
      it.key_type = ParseKeyType(o["keyType"].get<std::string>());
    }
    it.building_id = o.at("buildingId").get<std::string>();
    it.image = o.at("image").get<std::string>();
    it.reveals = StringsFrom(o, "reveals");
    it.tree_node = o.at("treeNode").get<int>();
    world.items.emplace(it.id, std::move(it));
  }
  world.plot = PlotFromJson(w.at("plotTree"));
  for (const auto& o : w.at("nodeObjects")) {
    world.node_objects[o.at("node").get<int>()] =
        o.at("object").get<std::string>();
  }

  for (const auto& t : doc.at("dialogTrees")) {
    DialogTree tree;
    tree.id = t.at("id").get<std::string>();
    tree.npc_id = t.at("npcId").get<std::string>();
    tree.root_id = t.at("rootId").get<std::string>();
    for (const auto& o : t.at("nodes")) {
      DialogNode node;
      node.id = o.at("id").get<std::string>();
      node.speaker = o.at("speaker") == "Player" ? Speaker::kPlayer
                                                 : Speaker::kNpc;
      node.text = o.at("text").get<std::string>();
      node.children = StringsFrom(o, "children");
      node.reveal_effects = StringsFrom(o, "revealEffects");
      node.hidden = o.at("hidden").get<bool>();
      node.topic = ParseDialogTopic(o.at("topic").get<std::string>());
      if (o.contains("evidence")) node.evidence = EvidenceFromJson(o["evidence"]);
      tree.nodes.emplace(node.id, std::move(node));
    }
    tree.main_branch = StringsFrom(t, "mainBranch");
    for (const auto& [topic, ids] : t.at("sideBranches").items()) {
      tree.side_branches[ParseDialogTopic(topic)] =
          ids.get<std::vector<std::string>>();
    }
    world.dialogs.emplace(tree.id, std::move(tree));
  }

  const json& g = doc.at("triggerGraph");
  def.triggers.initial = StringsFrom(g, "initial");
  for (const auto& e : g.at("edges")) {
    def.triggers.edges.push_back(
        TriggerEdge{e.at("source").get<std::string>(),
                    e.at("target").get<std::string>(),
                    ParseTriggerKind(e.at("kind").get<std::string>())});
  }
  for (const auto& k : doc.at("puzzles").at("keys")) {
    def.puzzles.keys.push_back(
        KeyPlacement{ParseKeyType(k.at("keyType").get<std::string>()),
                     k.at("buildingId").get<std::string>(),
                     k.at("depth").get<int>(), k.at("itemId").get<std::string>()});
  }
  for (const auto& l : doc.at("puzzles").at("locks")) {
    def.puzzles.locks.push_back(
        LockPlacement{ParseLockType(l.at("lockType").get<std::string>()),
                      l.at("buildingId").get<std::string>(),
                      l.at("depth").get<int>()});
  }

  const json& s = doc.at("solution");
  SuspectPuzzle& p = def.solution;
  p.victim = EntityRefFromJson(s.at("victim"));
  for (const auto& r : s.at("suspects")) p.suspects.push_back(EntityRefFromJson(r));
  p.culprit = EntityRefFromJson(s.at("culprit"));
  for (const auto& e : s.at("evidence")) p.evidence.push_back(EvidenceFromJson(e));
  p.characteristics = StringsFrom(s, "characteristics");
  for (const auto& [iri, text] : s.at("directConnections").items()) {
    p.direct_connections[iri] = text.get<std::string>();
  }
  for (const auto& [iri, table] : s.at("suspectValues").items()) {
    p.suspect_values[iri] = CharacteristicsFromJson(table);
  }
  return def;
}

std::string SerializeDefinition(const GameDefinition& def) {
  return DefinitionToJson(def).dump(2) + "\n";
}

GameDefinition ParseDefinition(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(LineOf(text, e.byte)) + ": " +
                    e.what());
  }
  if (doc.is_object() && doc.contains("version") &&
      doc["version"].is_number_integer() &&
      doc["version"].get<int>() != kDefinitionVersion) {
    throw Error(ErrorCode::kSchemaVersionMismatch,
                "definition version " + doc["version"].dump() +
                    ", expected " + std::to_string(kDefinitionVersion));
  }
  std::vector<std::string> problems = ValidateSchema(doc, DefinitionSchema());
  if (!problems.empty()) {
    std::string message = "schema violations:";
    for (const auto& p : problems) message += "\n  " + p;
    throw Error(ErrorCode::kInvalidDefinition, message);
  }
  try {
    return DefinitionFromJson(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidDefinition, e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GameDefinition LoadDefinition(const std::string& path) {
  try {
    return ParseDefinition(ReadTextFile(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

void SaveDefinition(const GameDefinition& def, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  }
  out << SerializeDefinition(def);
}

uint64_t Fnv1a64(std::string_view data) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string DefinitionHash(const GameDefinition& def) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(SerializeDefinition(def))));
  return buf;
}

const json& DefinitionSchema() {
  static const json kSchema = json::parse(kEmbeddedDefinitionSchema);
  return kSchema;
}

std::vector<std::string> ValidateSchema(const json& doc, const json& schema) {
  SchemaChecker checker(schema);
  checker.Check(doc, schema, "$");
  return checker.TakeErrors();
}

}  // namespace mystery

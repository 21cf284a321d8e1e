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

#include "mystery/pipeline.h"

#include <deque>
#include <map>
#include <set>

#include "mystery/errors.h"
#include "mystery/live_source.h"
#include "mystery/rng.h"
#include "mystery/validator.h"

namespace mystery {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void BadField(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kInvalidArgument, "config " + field + ": " + why);
}

template <typename T>
T Get(const json& doc, const char* key, const std::string& path, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    BadField(path + key, "wrong type");
  }
}

void RejectUnknown(const json& doc, const std::set<std::string>& known,
                   const std::string& path) {
  if (!doc.is_object()) BadField(path, "must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) BadField(path + key, "unknown key");
  }
}

}  // namespace

void GeneratorConfig::Validate() const {
  if (fixture.has_value() == endpoint.has_value()) {
    BadField("source", "exactly one of fixture or endpoint is required");
  }
  ga.Validate();
  if (paths.max_nodes < 2 || paths.max_nodes > 8) {
    BadField("paths.maxNodes", "must lie in [2, 8]");
  }
  if (paths.frontier_cap == 0 || paths.candidate_cap == 0) {
    BadField("paths", "caps must be positive");
  }
  for (double w : {paths.weights.length, paths.weights.uniqueness,
                   paths.weights.node_types, paths.weights.edge_types}) {
    if (!(w >= 0.0)) BadField("paths.weights", "must be non-negative");
  }
  world.Validate();
}

GeneratorConfig GeneratorConfig::FromJson(const json& doc) {
  RejectUnknown(doc,
                {"fixture", "endpoint", "seed", "ga", "paths", "world",
                 "templates", "output"},
                "");
  GeneratorConfig c;
  if (doc.contains("fixture")) c.fixture = Get<std::string>(doc, "fixture", "", "");
  if (doc.contains("endpoint")) {
    c.endpoint = Get<std::string>(doc, "endpoint", "", "");
  }
  c.seed = Get<uint64_t>(doc, "seed", "", c.seed);
  if (doc.contains("templates")) {
    c.templates = Get<std::string>(doc, "templates", "", "");
  }
  if (doc.contains("output")) c.output = Get<std::string>(doc, "output", "", "");
  if (doc.contains("ga")) {
    const json& g = doc["ga"];
    RejectUnknown(g,
                  {"populationSize", "generations", "mutationChance",
                   "suspectCount", "candidateLimit",
                   "excludedCharacteristics"},
                  "ga.");
    c.ga.population_size = Get<int>(g, "populationSize", "ga.", c.ga.population_size);
    c.ga.generations = Get<int>(g, "generations", "ga.", c.ga.generations);
    c.ga.mutation_chance =
        Get<double>(g, "mutationChance", "ga.", c.ga.mutation_chance);
    c.ga.suspect_count = Get<int>(g, "suspectCount", "ga.", c.ga.suspect_count);
    c.ga.candidate_limit =
        Get<size_t>(g, "candidateLimit", "ga.", c.ga.candidate_limit);
    c.ga.excluded_characteristics = Get<std::vector<std::string>>(
        g, "excludedCharacteristics", "ga.", c.ga.excluded_characteristics);
  }
  if (doc.contains("paths")) {
    const json& p = doc["paths"];
    RejectUnknown(p,
                  {"maxNodes", "frontierCap", "candidateCap", "lengthWeight",
                   "uniquenessWeight", "nodeTypeWeight", "edgeTypeWeight"},
                  "paths.");
    c.paths.max_nodes = Get<int>(p, "maxNodes", "paths.", c.paths.max_nodes);
    c.paths.frontier_cap =
        Get<size_t>(p, "frontierCap", "paths.", c.paths.frontier_cap);
    c.paths.candidate_cap =
        Get<size_t>(p, "candidateCap", "paths.", c.paths.candidate_cap);
    c.paths.weights.length =
        Get<double>(p, "lengthWeight", "paths.", c.paths.weights.length);
    c.paths.weights.uniqueness = Get<double>(p, "uniquenessWeight", "paths.",
                                             c.paths.weights.uniqueness);
    c.paths.weights.node_types =
        Get<double>(p, "nodeTypeWeight", "paths.", c.paths.weights.node_types);
    c.paths.weights.edge_types =
        Get<double>(p, "edgeTypeWeight", "paths.", c.paths.weights.edge_types);
  }
  if (doc.contains("world")) {
    const json& w = doc["world"];
    RejectUnknown(w, {"redHerringRate", "keyChance", "lockChance"}, "world.");
    c.world.red_herring_rate =
        Get<double>(w, "redHerringRate", "world.", c.world.red_herring_rate);
    c.world.key_chance = Get<double>(w, "keyChance", "world.", c.world.key_chance);
    c.world.lock_chance =
        Get<double>(w, "lockChance", "world.", c.world.lock_chance);
  }
  return c;
}

GeneratorConfig GeneratorConfig::Load(const std::string& path) {
  std::string text = ReadTextFile(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
  return FromJson(doc);
}

ojson GeneratorConfig::ToJson() const {
  ojson out = ojson::object();
  if (fixture) out["fixture"] = *fixture;
  if (endpoint) out["endpoint"] = *endpoint;
  out["seed"] = seed;
  out["ga"] = ojson{{"populationSize", ga.population_size},
                    {"generations", ga.generations},
                    {"mutationChance", ga.mutation_chance},
                    {"suspectCount", ga.suspect_count},
                    {"candidateLimit", ga.candidate_limit},
                    {"excludedCharacteristics", ga.excluded_characteristics}};
  out["paths"] = ojson{{"maxNodes", paths.max_nodes},
                       {"frontierCap", paths.frontier_cap},
                       {"candidateCap", paths.candidate_cap},
                       {"lengthWeight", paths.weights.length},
                       {"uniquenessWeight", paths.weights.uniqueness},
                       {"nodeTypeWeight", paths.weights.node_types},
                       {"edgeTypeWeight", paths.weights.edge_types}};
  out["world"] = ojson{{"redHerringRate", world.red_herring_rate},
                       {"keyChance", world.key_chance},
                       {"lockChance", world.lock_chance}};
  if (templates) out["templates"] = *templates;
  if (output) out["output"] = *output;
  return out;
}

KnowledgeStore OpenStore(const GeneratorConfig& config) {
  config.Validate();
  if (config.fixture) return KnowledgeStore::LoadFixture(*config.fixture);
  LiveConfig live = LiveConfigFromEnvironment();
  live.endpoint = *config.endpoint;
  return KnowledgeStore(MakeLiveSource(live));
}

std::vector<EntityRef> ReachableCandidates(const EntityRef& victim,
                                           KnowledgeStore& store,
                                           size_t limit, int max_nodes) {
  std::map<std::string, int> depth = {{victim.iri, 0}};
  std::deque<EntityRef> queue = {victim};
  while (!queue.empty()) {
    EntityRef at = queue.front();
    queue.pop_front();
    int d = depth.at(at.iri);
    if (d + 1 >= max_nodes) continue;
    for (const Link& link : store.Links(at)) {
      const EntityRef& next = link.from.iri == at.iri ? link.to : link.from;
      if (depth.emplace(next.iri, d + 1).second) queue.push_back(next);
    }
  }
  std::vector<EntityRef> out;
  for (const EntityRef& ref : store.RelatedPersons(victim, limit)) {
    if (ref.iri != victim.iri && depth.count(ref.iri)) out.push_back(ref);
  }
  return out;
}

GameDefinition GenerateGame(const std::string& victim_name,
                            KnowledgeStore& store,
                            const GeneratorConfig& config) {
  config.Validate();
  const TemplateCorpus corpus = config.templates
                                    ? TemplateCorpus::Load(*config.templates)
                                    : TemplateCorpus::Default();
  EntityRef victim = store.ResolveVictim(victim_name);
  Rng root(config.seed);

  GAConfig ga = config.ga;
  ga.rng_seed = root.Fork("suspects").Next();
  std::vector<EntityRef> candidates = ReachableCandidates(
      victim, store, ga.candidate_limit, config.paths.max_nodes);
  SuspectPuzzle puzzle = Evolve(victim, candidates, store, ga);

  std::vector<std::pair<EntityRef, Path>> paths;
  for (const EntityRef& suspect : puzzle.suspects) {
    Path major = FindMajorPath(victim, suspect, store, config.paths);
    paths.emplace_back(suspect, ExpandMinorPaths(major, store, config.paths));
  }
  PlotTree tree = BuildPlotTree(victim, paths);

  Rng world_rng = root.Fork("world");
  GeneratedWorld generated =
      GenerateWorld(tree, store, world_rng, config.world);
  Rng dialog_rng = root.Fork("dialog");
  GenerateDialogs(generated.world, puzzle, store, corpus, dialog_rng);

  GameDefinition def;
  def.metadata.victim = victim.label;
  def.metadata.victim_iri = victim.iri;
  def.metadata.seed = config.seed;
  def.metadata.source = config.fixture ? "fixture:" + *config.fixture
                                       : "endpoint:" + *config.endpoint;
  def.metadata.random_cities = generated.world.random_cities;
  def.world = std::move(generated.world);
  def.triggers = DeriveTriggerGraph(def.world);
  def.puzzles = std::move(generated.puzzles);
  def.solution = std::move(puzzle);

  ValidationReport report = ValidateDefinition(def);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidDefinition, report.ToString());
  }
  return def;
}

}  // namespace mystery

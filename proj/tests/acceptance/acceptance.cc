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

// Acceptance suite: one PASS/FAIL line per criterion with its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mystery/engine.h"
#include "mystery/errors.h"
#include "mystery/game_definition.h"
#include "mystery/paths.h"
#include "mystery/pipeline.h"
#include "mystery/solver.h"
#include "mystery/suspects.h"
#include "mystery/validator.h"
#include "mystery/worldgen.h"
#include "oracles.h"
#include "test_support.h"

namespace mystery {
namespace {

using nlohmann::json;

constexpr int kSeeds = 50;
constexpr double kDiversityTolerance = 1e-9;
constexpr int kDiversityInstances = 1000;
constexpr int kPairingTables = 500;
constexpr int kGaRuns = 20;
constexpr double kGaSuccessRate = 0.95;
constexpr int kPlacementWorlds = 120;
constexpr int kDialogGames = 20;
constexpr int kMaxPathNodes = 5;
constexpr int kMaxSideTopics = 2;
constexpr size_t kBirthNodes = 2;

struct Fixture {
  std::string path;
  std::string victim;
};

const std::vector<Fixture>& Fixtures() {
  static const std::vector<Fixture> fixtures = {
      {testing::EinsteinFixture(), "Albert Einstein"},
      {testing::GandhiFixture(), "Mahatma Gandhi"}};
  return fixtures;
}

// Games shared by later criteria once the solvability batch has run.
std::vector<GameDefinition>& Batch() {
  static std::vector<GameDefinition> games;
  return games;
}

struct CriterionResult {
  bool pass = true;
  std::string detail;
};

CriterionResult Fail(const std::string& detail) { return {false, detail}; }

std::string Str(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

CriterionResult Solvability() {
  int won = 0;
  int total = 0;
  std::string first_failure;
  for (uint64_t seed = 1; seed <= kSeeds; ++seed) {
    for (const Fixture& f : Fixtures()) {
      ++total;
      try {
        GeneratorConfig config = testing::FixtureConfig(f.path, seed);
        KnowledgeStore store = OpenStore(config);
        GameDefinition def = GenerateGame(f.victim, store, config);
        Playthrough run = AutoSolve(def);
        if (run.outcome == mystery::Outcome::kWon) {
          ++won;
        } else if (first_failure.empty()) {
          first_failure = f.victim + " seed " + std::to_string(seed);
        }
        Batch().push_back(std::move(def));
      } catch (const Error& e) {
        if (first_failure.empty()) {
          first_failure = f.victim + " seed " + std::to_string(seed) + ": " +
                          e.what();
        }
      }
    }
  }
  std::string detail = std::to_string(won) + "/" + std::to_string(total) +
                       " games won over " + std::to_string(kSeeds) + " seeds";
  if (won != total) return Fail(detail + "; first failure " + first_failure);
  return {true, detail};
}

// Writes `rows` as a fixture of persons s0..sn-1 and loads it.
KnowledgeStore TableStore(const std::vector<Characteristics>& rows) {
  json entities = json::array();
  entities.push_back({{"iri", "v"}, {"label", "Victim"}, {"kind", "person"}});
  for (size_t i = 0; i < rows.size(); ++i) {
    json values = json::object();
    for (const auto& [name, held] : rows[i]) {
      values[name] = std::vector<std::string>(held.begin(), held.end());
    }
    entities.push_back({{"iri", "s" + std::to_string(i)},
                        {"label", "S" + std::to_string(i)},
                        {"kind", "person"},
                        {"characteristics", values}});
  }
  json doc = {{"version", 1}, {"entities", entities}, {"links", json::array()}};
  return KnowledgeStore::FromFixtureText(doc.dump());
}

Chromosome TableChromosome(size_t suspects, int characteristics) {
  Chromosome c;
  for (size_t i = 0; i < suspects; ++i) {
    c.suspects.push_back({"s" + std::to_string(i), "S" + std::to_string(i)});
  }
  for (int i = 0; i < characteristics; ++i) {
    c.characteristics.push_back("c" + std::to_string(i));
  }
  return c;
}

CriterionResult DiversityOracle() {
  Rng rng(4242);
  double worst = 0.0;
  for (int instance = 0; instance < kDiversityInstances; ++instance) {
    int n = 2 + static_cast<int>(rng.Uniform(4));
    int m = 1 + static_cast<int>(rng.Uniform(4));
    int v = 1 + static_cast<int>(rng.Uniform(3));
    auto rows = oracle::RandomTable(rng, n, m, v);
    Chromosome c = TableChromosome(rows.size(), m);
    KnowledgeStore store = TableStore(rows);
    double got = DiversityFitness(c, store);
    double want = oracle::DiversityBySummation(rows, c.characteristics);
    worst = std::max(worst, std::abs(got - want));
  }
  std::string detail = std::to_string(kDiversityInstances) +
                       " instances, max deviation " + Str(worst);
  if (worst > kDiversityTolerance) return Fail(detail);
  return {true, detail};
}

CriterionResult PairingOracle() {
  Rng rng(777);
  int mismatches = 0;
  std::string first;
  for (int table = 0; table < kPairingTables; ++table) {
    int n = 2 + static_cast<int>(rng.Uniform(4));
    int m = 1 + static_cast<int>(rng.Uniform(4));
    int v = 1 + static_cast<int>(rng.Uniform(3));
    auto rows = oracle::RandomTable(rng, n, m, v);
    Chromosome c = TableChromosome(rows.size(), m);
    KnowledgeStore store = TableStore(rows);
    int got = SolvabilityFitness(c, store).depth;
    int want = oracle::DepthByEnumeration(rows, c.characteristics).depth;
    if (got != want) {
      if (first.empty()) {
        first = "table " + std::to_string(table) + ": " + std::to_string(got) +
                " vs " + std::to_string(want);
      }
      ++mismatches;
    }
  }
  std::string detail = std::to_string(kPairingTables) + " tables, " +
                       std::to_string(mismatches) + " mismatches";
  if (mismatches) return Fail(detail + "; " + first);
  return {true, detail};
}

CriterionResult GaConvergence() {
  KnowledgeStore store = KnowledgeStore::LoadFixture(
      testing::SourcePath("tests/data/ga-unique.json"));
  EntityRef victim = store.ResolveVictim("Victim K");
  auto candidates = store.RelatedPersons(victim, 1000);
  int reached = 0;
  for (uint64_t seed = 1; seed <= kGaRuns; ++seed) {
    GAConfig config;
    config.population_size = 100;
    config.generations = 500;
    config.mutation_chance = 0.20;
    config.rng_seed = seed;
    EvolutionOutcome outcome = RunEvolution(victim, candidates, store, config);
    reached += outcome.best_depth == config.suspect_count - 1;
  }
  double rate = static_cast<double>(reached) / kGaRuns;
  std::string detail = std::to_string(reached) + "/" + std::to_string(kGaRuns) +
                       " runs reached depth n-1";
  if (rate < kGaSuccessRate) return Fail(detail);
  return {true, detail};
}

GameDefinition GandhiTriple(const std::string& culprit) {
  KnowledgeStore store = KnowledgeStore::LoadFixture(testing::GandhiFixture());
  GameDefinition def;
  for (const char* iri : {"p:lyons", "p:avery", "p:verma"}) {
    EntityRecord r = store.EntityFacts(std::string(iri));
    def.solution.suspects.push_back(r.ref);
    def.solution.suspect_values[r.ref.iri] = r.characteristics;
    if (iri == culprit) def.solution.culprit = r.ref;
  }
  return def;
}

CriterionResult EvidenceSemantics() {
  GameDefinition lyons = GandhiTriple("p:lyons");
  WarrantResult accepted = EvaluateWarrant(
      lyons, {"p:lyons",
              {{"p:avery", {"deathYear", "1980"}},
               {"p:verma", {"deathYear", "1980"}}}});
  if (accepted.outcome != mystery::Outcome::kWon) {
    return Fail("1980 rejected for its holders while the culprit died 1926");
  }
  WarrantResult wrong_holder = EvaluateWarrant(
      lyons, {"p:lyons",
              {{"p:avery", {"deathYear", "1926"}},
               {"p:verma", {"deathYear", "1980"}}}});
  for (const SuspectVerdict& v : wrong_holder.verdicts) {
    if (v.accepted != (v.suspect == "p:verma")) {
      return Fail("value accepted for a suspect that does not hold it");
    }
  }
  GameDefinition avery = GandhiTriple("p:avery");
  WarrantResult shared = EvaluateWarrant(
      avery, {"p:avery",
              {{"p:lyons", {"deathYear", "1926"}},
               {"p:verma", {"deathYear", "1980"}}}});
  if (shared.outcome != mystery::Outcome::kLost) {
    return Fail("1980 accepted although the culprit shares it");
  }
  for (const SuspectVerdict& v : shared.verdicts) {
    if (v.accepted != (v.suspect == "p:lyons")) {
      return Fail("verdict for " + v.suspect + " wrong when culprit shares");
    }
  }
  return {true, "shared 1980 clears holders only; rejected when shared by "
                "the culprit"};
}

// Layer at which each object first appears in an unobstructed playthrough.
// Activating an object shows it with its city and building, the keys and
// bystanders of any building shown, and activates what it lists; every clue
// source shown before a layer fires during that layer.
class LayerOracle {
 public:
  explicit LayerOracle(const World& world) : world_(world) {
    for (const std::string& id : world.initial) Activate(id, 0);
    std::set<std::string> fired;
    for (int layer = 1;; ++layer) {
      std::vector<std::string> targets;
      for (const auto& [id, npc] : world.npcs) {
        if (!Shown(id, layer) || npc.is_red_herring) continue;
        auto tree = world.dialogs.find(npc.dialog_tree_id);
        if (tree == world.dialogs.end()) {
          // Before dialog generation the planned clues stand in for it.
          if (!npc.clue_targets.empty() && fired.insert(id).second) {
            targets.insert(targets.end(), npc.clue_targets.begin(),
                           npc.clue_targets.end());
          }
          continue;
        }
        for (const auto& [node_id, node] : tree->second.nodes) {
          if (node.reveal_effects.empty() || !fired.insert(node_id).second) {
            continue;
          }
          targets.insert(targets.end(), node.reveal_effects.begin(),
                         node.reveal_effects.end());
        }
      }
      for (const auto& [id, item] : world.items) {
        if (!Shown(id, layer) || item.reveals.empty()) continue;
        if (!fired.insert(id).second) continue;
        targets.insert(targets.end(), item.reveals.begin(), item.reveals.end());
      }
      if (targets.empty()) break;
      for (const std::string& t : targets) Activate(t, layer);
    }
  }

  const std::map<std::string, int>& layers() const { return layers_; }

 private:
  bool Shown(const std::string& id, int layer) const {
    auto it = layers_.find(id);
    return it != layers_.end() && it->second < layer;
  }

  void Show(const std::string& id, int layer) {
    if (world_.KindOf(id) == ObjectKind::kDialogNode) return;
    if (!layers_.emplace(id, layer).second) return;
    std::string building = world_.BuildingOf(id);
    std::string city = world_.CityOf(id);
    if (!city.empty()) Show(city, layer);
    if (!building.empty()) Show(building, layer);
    if (auto b = world_.buildings.find(id); b != world_.buildings.end()) {
      for (const std::string& item : b->second.items) {
        if (world_.items.at(item).kind == ItemKind::kKey) Show(item, layer);
      }
      for (const std::string& npc : b->second.occupants) {
        if (world_.npcs.at(npc).is_red_herring) Show(npc, layer);
      }
    }
  }

  void Activate(const std::string& id, int layer) {
    Show(id, layer);
    if (!activated_.insert(id).second) return;
    if (auto c = world_.cities.find(id); c != world_.cities.end()) {
      for (const std::string& child : c->second.activates) {
        Activate(child, layer);
      }
    } else if (auto b = world_.buildings.find(id);
               b != world_.buildings.end()) {
      for (const std::string& child : b->second.activates) {
        Activate(child, layer);
      }
    }
  }

  const World& world_;
  std::map<std::string, int> layers_;
  std::set<std::string> activated_;
};

// Empty when every locked building has its own key at a smaller depth.
std::string CheckLocks(const World& world) {
  std::map<std::string, int> depth = LayerOracle(world).layers();
  if (depth != SimulateDepths(world).shown) {
    return "playthrough layers disagree with the library depths";
  }
  std::vector<std::pair<int, std::string>> locked;
  std::vector<std::pair<int, const Item*>> keys;
  for (const auto& [id, b] : world.buildings) {
    if (!b.lock) continue;
    if (!depth.count(id)) return "locked " + id + " unreachable";
    locked.emplace_back(depth[id], id);
  }
  for (const auto& [id, item] : world.items) {
    if (item.kind != ItemKind::kKey) continue;
    if (!depth.count(id)) return "key " + id + " unreachable";
    keys.emplace_back(depth[id], &item);
  }
  if (keys.size() < locked.size()) return "fewer keys than locks";
  std::sort(locked.begin(), locked.end());
  std::sort(keys.begin(), keys.end());
  std::vector<bool> used(keys.size(), false);
  for (const auto& [lock_depth, building] : locked) {
    LockType type = *world.buildings.at(building).lock;
    bool matched = false;
    for (size_t k = 0; k < keys.size() && !matched; ++k) {
      const auto& [key_depth, item] = keys[k];
      if (used[k] || key_depth >= lock_depth || !item->key_type ||
          LockOpenedBy(*item->key_type) != type) {
        continue;
      }
      used[k] = matched = true;
    }
    if (!matched) return "no shallower key for " + building;
  }
  return "";
}

CriterionResult PuzzleInvariants() {
  std::vector<std::pair<PlotTree, KnowledgeStore>> sources;
  for (const Fixture& f : Fixtures()) {
    GeneratorConfig config = testing::FixtureConfig(f.path, 1);
    KnowledgeStore store = OpenStore(config);
    PlotTree tree = GenerateGame(f.victim, store, config).world.plot;
    sources.emplace_back(std::move(tree), std::move(store));
  }
  int worlds = 0;
  int locks = 0;
  for (uint64_t seed = 1; worlds < kPlacementWorlds; ++seed) {
    for (auto& [tree, store] : sources) {
      WorldgenOptions options;
      options.key_chance = seed % 3 == 0 ? 0.9 : 0.5;
      options.lock_chance = seed % 2 == 0 ? 0.9 : 0.5;
      Rng rng(seed);
      GeneratedWorld gen = GenerateWorld(tree, store, rng, options);
      std::string problem = CheckLocks(gen.world);
      if (!problem.empty()) {
        return Fail("seed " + std::to_string(seed) + ": " + problem);
      }
      ++worlds;
      for (const auto& [id, b] : gen.world.buildings) locks += b.lock.has_value();
    }
  }
  for (const GameDefinition& def : Batch()) {
    std::string problem = CheckLocks(def.world);
    if (!problem.empty()) return Fail(def.metadata.victim + ": " + problem);
  }
  return {true, std::to_string(worlds) + " worlds plus " +
                    std::to_string(Batch().size()) + " games, " +
                    std::to_string(locks) + " locks all keyed earlier"};
}

std::string Entity(const std::string& iri) {
  return json{{"iri", iri}, {"label", iri}, {"kind", "person"}}.dump();
}

CriterionResult PathCap() {
  int major_paths = 0;
  for (const GameDefinition& def : Batch()) {
    const PlotTree& plot = def.world.plot;
    for (int leaf : plot.suspect_leaves) {
      int nodes = 0;
      for (int n = leaf; n >= 0; n = plot.nodes[n].parent) {
        nodes += plot.nodes[n].major;
      }
      ++major_paths;
      if (nodes > kMaxPathNodes) {
        return Fail(def.metadata.victim + " has a " + std::to_string(nodes) +
                    "-node major path");
      }
    }
  }
  json doc = {{"version", 1},
              {"entities", json::array()},
              {"links", json::array()}};
  for (const char* iri : {"v", "a", "b", "c", "s"}) {
    doc["entities"].push_back(json::parse(Entity(iri)));
  }
  for (auto [from, to] : std::vector<std::pair<const char*, const char*>>{
           {"v", "a"}, {"a", "s"}, {"v", "b"}, {"b", "c"}, {"c", "s"}}) {
    doc["links"].push_back({{"from", from}, {"to", to}, {"predicate", "rel"}});
  }
  KnowledgeStore store = KnowledgeStore::FromFixtureText(doc.dump());
  Path best = FindMajorPath({"v", "v"}, {"s", "s"}, store);
  std::vector<std::string> iris;
  for (const EntityRef& n : best.nodes) iris.push_back(n.iri);
  if (iris != std::vector<std::string>{"v", "b", "c", "s"}) {
    return Fail("two-path fixture did not prefer the longer path");
  }
  return {true, std::to_string(major_paths) +
                    " major paths within 5 nodes; longer path preferred"};
}

CriterionResult DialogStructure() {
  static const std::regex kPlaceholder(
      R"((^|[^A-Z_])(PERSON|PLACE|ITEM|DATE|VALUE)([^A-Z_]|$))");
  if (Batch().size() < static_cast<size_t>(kDialogGames)) {
    return Fail("solvability batch has fewer than 20 games");
  }
  int trees = 0;
  int birth = 0;
  for (int g = 0; g < kDialogGames; ++g) {
    const World& world = Batch()[g].world;
    for (const auto& [id, tree] : world.dialogs) {
      ++trees;
      if (!tree.nodes.count(tree.root_id) ||
          tree.nodes.at(tree.root_id).text != kGreeting) {
        return Fail(id + " is not rooted at a greeting");
      }
      if (static_cast<int>(tree.side_branches.size()) > kMaxSideTopics) {
        return Fail(id + " has more than two side topics");
      }
      auto it = tree.side_branches.find(DialogTopic::kBirth);
      if (it != tree.side_branches.end()) {
        ++birth;
        if (it->second.size() != kBirthNodes) {
          return Fail(id + " birth topic has " +
                      std::to_string(it->second.size()) + " nodes");
        }
      }
      for (const auto& [node_id, node] : tree.nodes) {
        if (std::regex_search(node.text, kPlaceholder)) {
          return Fail(node_id + " keeps a placeholder: " + node.text);
        }
      }
    }
    for (const auto& [id, item] : world.items) {
      if (std::regex_search(item.text, kPlaceholder)) {
        return Fail(id + " keeps a placeholder");
      }
    }
  }
  return {true, std::to_string(trees) + " trees in " +
                    std::to_string(kDialogGames) + " games, " +
                    std::to_string(birth) + " birth topics"};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

CriterionResult Determinism() {
  std::string dir = testing::TempDir("acceptance-determinism");
  for (const Fixture& f : Fixtures()) {
    std::string outputs[2];
    for (int i = 0; i < 2; ++i) {
      outputs[i] = dir + "/run" + std::to_string(i) + ".json";
      std::string command = std::string(MYSTERY_CLI) + " generate --victim '" +
                            f.victim + "' --fixture '" + f.path +
                            "' --seed 11 --out '" + outputs[i] +
                            "' 2>/dev/null";
      if (std::system(command.c_str()) != 0) {
        return Fail("generate failed for " + f.victim);
      }
    }
    std::string a = Slurp(outputs[0]);
    if (a.empty() || a != Slurp(outputs[1])) {
      return Fail(f.victim + " outputs differ");
    }
  }
  return {true, "identical bytes for both fixtures"};
}

CriterionResult EngineReplay() {
  const GameDefinition& def = Batch().front();
  Engine engine(def);
  Playthrough run = AutoSolve(def);
  GameState live = engine.NewSession("recorded");
  for (const Action& a : run.actions) engine.Apply(live, a);
  SaveFile save = SaveFromJson(json::parse(
      SaveToJson({"recorded", DefinitionHash(def), live.log}).dump()));
  GameState replayed = Replay(engine, "recorded", save.actions);
  if (replayed.outcome != mystery::Outcome::kWon) return Fail("not Won");
  if (replayed.events != live.events) return Fail("event logs differ");

  GameDefinition gandhi = Batch()[1];
  std::vector<std::pair<std::string, GameDefinition>> faults;
  const GameDefinition* locked = nullptr;
  for (const GameDefinition& g : Batch()) {
    if (!g.puzzles.keys.empty()) {
      locked = &g;
      break;
    }
  }
  if (!locked) return Fail("no batch game places a key");
  GameDefinition keyless = *locked;
  const KeyPlacement& key = keyless.puzzles.keys.front();
  std::erase(keyless.world.buildings.at(key.building_id).items, key.item_id);
  keyless.world.items.erase(key.item_id);
  faults.emplace_back("key-exists", keyless);

  GameDefinition culprit = gandhi;
  culprit.solution.evidence.front().suspect = culprit.solution.culprit;
  faults.emplace_back("culprit-in-evidence", culprit);

  GameDefinition cyclic = gandhi;
  TriggerEdge e = cyclic.triggers.edges.front();
  cyclic.triggers.edges.push_back({e.target, e.source, TriggerKind::kClue});
  faults.emplace_back("trigger-acyclic", cyclic);

  if (!ValidateDefinition(def).ok()) return Fail("clean game flagged");
  for (const auto& [check, faulty] : faults) {
    if (!ValidateDefinition(faulty).Has(check)) {
      return Fail(check + " fault not detected");
    }
  }
  return {true, std::to_string(run.actions.size()) +
                    "-step log replays identically; 3/3 faults detected"};
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<CriterionResult()> run;
};

}  // namespace
}  // namespace mystery

int main() {
  using mystery::Criterion;
  const std::vector<Criterion> criteria = {
      {"solvability", 60.0, mystery::Solvability},
      {"diversity-oracle", 5.0, mystery::DiversityOracle},
      {"pairing-oracle", 30.0, mystery::PairingOracle},
      {"ga-convergence", 120.0, mystery::GaConvergence},
      {"evidence-semantics", 1.0, mystery::EvidenceSemantics},
      {"puzzle-invariants", 10.0, mystery::PuzzleInvariants},
      {"path-cap", 1.0, mystery::PathCap},
      {"dialog-structure", 5.0, mystery::DialogStructure},
      {"determinism", 10.0, mystery::Determinism},
      {"engine-replay", 1.0, mystery::EngineReplay},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    mystery::CriterionResult outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = mystery::Fail(std::string("threw ") + e.what());
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (outcome.pass && seconds > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail += "; over time budget";
    }
    failed += !outcome.pass;
    std::printf("%s %-20s %7.2fs / %5.0fs  %s\n",
                outcome.pass ? "PASS" : "FAIL", c.name.c_str(), seconds,
                c.budget_seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}

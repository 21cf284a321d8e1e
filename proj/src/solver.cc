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

#include "mystery/solver.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "mystery/errors.h"

namespace mystery {
namespace {

using ojson = nlohmann::ordered_json;

constexpr size_t kStepLimit = 200000;
// States the exact search may visit before yielding to the greedy walk.
constexpr size_t kExactStateCap = 4000;

class Solver {
 public:
  explicit Solver(const GameDefinition& def)
      : def_(def), world_(def.world), engine_(Engine::Trusted(def)) {}

  Playthrough Run() {
    GameState state = engine_.NewSession("solver");
    if (auto shortest = Shortest(kExactStateCap)) {
      for (const Action& a : *shortest) engine_.Apply(state, a);
    }
    while (state.outcome == Outcome::kInProgress) {
      if (state.log.size() > kStepLimit) {
        throw Error(ErrorCode::kUnsolvable, "step limit exceeded");
      }
      if (AllEvidenceFound(state)) {
        engine_.Apply(state, Action::IssueWarrant(DeduceWarrant(def_, state)));
        break;
      }
      if (std::optional<Action> local = LocalWork(state)) {
        engine_.Apply(state, *local);
        continue;
      }
      MoveToWork(state);
    }
    Playthrough out;
    out.actions = state.log;
    out.outcome = state.outcome;
    out.step_count = state.log.size();
    return out;
  }

 private:
  bool AllEvidenceFound(const GameState& state) const {
    for (const auto& e : def_.solution.evidence) {
      if (!state.discovered_evidence.count(e)) return false;
    }
    return true;
  }

  static std::string StateKey(const GameState& s) {
    std::string key = s.current_city + "|" + s.current_building;
    for (const auto* set : {&s.reveal.shown, &s.visited_dialog, &s.inventory,
                            &s.unlocked, &s.observed}) {
      key += '|';
      for (const auto& id : *set) key += id + ",";
    }
    return key;
  }

  // Fewest primitive actions that discover every evidence triple, found by
  // breadth-first search; empty when more than `cap` states are needed.
  // Throws kUnsolvable when the whole state space is exhausted.
  // Observing a character changes nothing else, so it is never expanded.
  std::optional<std::vector<Action>> Shortest(size_t cap) const {
    struct Node {
      GameState state;
      int parent;
      Action via;
    };
    std::vector<Node> nodes;
    nodes.push_back({engine_.NewSession("solver"), -1, {}});
    if (AllEvidenceFound(nodes[0].state)) return std::vector<Action>{};
    std::unordered_set<std::string> seen{StateKey(nodes[0].state)};
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int at = queue.front();
      queue.pop_front();
      for (const Action& action : engine_.AvailableActions(nodes[at].state)) {
        if (action.type == ActionType::kIssueWarrant ||
            (action.type == ActionType::kObserve &&
             world_.npcs.count(action.target))) {
          continue;
        }
        GameState next = nodes[at].state;
        engine_.Apply(next, action);
        next.log.clear();
        next.events.clear();
        if (!seen.insert(StateKey(next)).second) continue;
        bool done = AllEvidenceFound(next);
        nodes.push_back({std::move(next), at, action});
        if (done) {
          std::vector<Action> path;
          for (int n = static_cast<int>(nodes.size()) - 1; n > 0;
               n = nodes[n].parent) {
            path.push_back(nodes[n].via);
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (nodes.size() > cap) return std::nullopt;
        queue.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
    throw Error(ErrorCode::kUnsolvable,
                "every reachable state was explored without finding the "
                "evidence");
  }

  bool NodeUseful(const GameState& state, const DialogNode& node) const {
    if (node.evidence && !state.discovered_evidence.count(*node.evidence)) {
      return true;
    }
    for (const auto& t : node.reveal_effects) {
      if (!state.reveal.activated.count(t)) return true;
    }
    return false;
  }

  bool SubtreeUseful(const GameState& state, const DialogTree& tree,
                     const std::string& id) const {
    const DialogNode& node = tree.nodes.at(id);
    if (!state.visited_dialog.count(id) && NodeUseful(state, node)) return true;
    for (const auto& c : node.children) {
      if (SubtreeUseful(state, tree, c)) return true;
    }
    return false;
  }

  std::optional<Action> UsefulTalk(const GameState& state,
                                   const std::string& npc) const {
    const Npc& n = world_.npcs.at(npc);
    const DialogTree& tree = world_.dialogs.at(n.dialog_tree_id);
    if (!SubtreeUseful(state, tree, tree.root_id)) return std::nullopt;
    for (const std::string& choice : engine_.TalkChoices(state, npc)) {
      if (SubtreeUseful(state, tree, choice)) return Action::Talk(npc, choice);
    }
    return std::nullopt;
  }

  bool ItemUseful(const GameState& state, const std::string& id) const {
    const Item& item = world_.items.at(id);
    if (item.kind == ItemKind::kKey) return KeyNeeded(state, item);
    if (state.observed.count(id)) return false;
    for (const auto& t : item.reveals) {
      if (!state.reveal.activated.count(t)) return true;
    }
    return false;
  }

  bool KeyNeeded(const GameState& state, const Item& key) const {
    if (state.inventory.count(key.id) || !key.key_type) return false;
    LockType lock = LockOpenedBy(*key.key_type);
    for (const auto& held : state.inventory) {
      const auto& type = world_.items.at(held).key_type;
      if (type && LockOpenedBy(*type) == lock) return false;
    }
    for (const auto& [id, b] : world_.buildings) {
      if (b.lock == lock && !state.unlocked.count(id)) return true;
    }
    return false;
  }

  std::optional<Action> WorkIn(const GameState& state,
                               const std::string& building) const {
    const Building& b = world_.buildings.at(building);
    for (const auto& npc : b.occupants) {
      if (!state.reveal.shown.count(npc)) continue;
      if (auto talk = UsefulTalk(state, npc)) return talk;
    }
    for (const auto& item : b.items) {
      if (!state.reveal.shown.count(item) || !ItemUseful(state, item)) continue;
      return world_.items.at(item).kind == ItemKind::kKey
                 ? Action::TakeItem(item)
                 : Action::Observe(item);
    }
    return std::nullopt;
  }

  std::optional<Action> LocalWork(const GameState& state) const {
    if (state.current_building.empty()) return std::nullopt;
    return WorkIn(state, state.current_building);
  }

  std::optional<std::string> KeyFor(const GameState& state,
                                    const Building& b) const {
    for (const auto& held : state.inventory) {
      const auto& type = world_.items.at(held).key_type;
      if (type && b.lock && LockOpenedBy(*type) == *b.lock) return held;
    }
    return std::nullopt;
  }

  void MoveToWork(GameState& state) {
    std::string best;
    int best_cost = 0;
    for (const auto& [id, b] : world_.buildings) {
      if (id == state.current_building || !state.reveal.shown.count(id)) {
        continue;
      }
      bool locked = !engine_.CanEnter(state, id);
      if (locked && !KeyFor(state, b)) continue;
      if (!WorkIn(state, id)) continue;
      int cost = (b.city_id == state.current_city ? 1 : 2) + (locked ? 1 : 0);
      if (best.empty() || cost < best_cost) {
        best = id;
        best_cost = cost;
      }
    }
    if (best.empty()) {
      throw Error(ErrorCode::kUnsolvable,
                  "no reachable location has anything left to do after " +
                      std::to_string(state.log.size()) + " steps");
    }
    const Building& b = world_.buildings.at(best);
    if (b.city_id != state.current_city) {
      engine_.Apply(state, Action::TravelTo(b.city_id));
    }
    if (!engine_.CanEnter(state, best)) {
      engine_.Apply(state, Action::UseKey(*KeyFor(state, b), best));
    }
    engine_.Apply(state, Action::EnterBuilding(best));
  }

  const GameDefinition& def_;
  const World& world_;
  Engine engine_;
};

std::string FormatNumber(double value) {
  if (std::isfinite(value) && value == std::floor(value) &&
      std::fabs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string CellText(const Metrics& m, const std::string& column) {
  if (column == "pathLengthPerSuspect") {
    std::string out;
    for (size_t i = 0; i < m.path_length_per_suspect.size(); ++i) {
      if (i) out += ";";
      out += std::to_string(m.path_length_per_suspect[i]);
    }
    return out;
  }
  if (column == "sideBranchCounts") {
    std::string out;
    for (const auto& [topic, count] : m.side_branch_counts) {
      if (!out.empty()) out += ";";
      out += topic + "=" + std::to_string(count);
    }
    return out;
  }
  return FormatNumber(MetricValue(m, column));
}

}  // namespace

Playthrough AutoSolve(const GameDefinition& def) { return Solver(def).Run(); }

Warrant DeduceWarrant(const GameDefinition& def, const GameState& state) {
  Warrant warrant;
  std::vector<std::string> uncleared;
  for (const auto& s : def.solution.suspects) {
    bool cleared = false;
    for (const auto& e : state.discovered_evidence) {
      if (e.suspect.iri == s.iri) {
        warrant.evidence[s.iri] = WarrantEvidence{e.characteristic, e.value};
        cleared = true;
        break;
      }
    }
    if (!cleared) uncleared.push_back(s.iri);
  }
  if (uncleared.size() != 1) {
    throw Error(ErrorCode::kUnsolvable,
                std::to_string(uncleared.size()) +
                    " suspects remain uncleared by the evidence found");
  }
  warrant.accused = uncleared.front();
  return warrant;
}

Metrics ComputeMetrics(const GameDefinition& def) {
  const World& w = def.world;
  Metrics m;
  m.tree_size = static_cast<int>(w.plot.size());
  for (int leaf : w.plot.suspect_leaves) {
    m.path_length_per_suspect.push_back(
        static_cast<int>(w.plot.PathTo(leaf).size()));
  }
  m.city_count = static_cast<int>(w.cities.size());
  m.building_count = static_cast<int>(w.buildings.size());
  m.buildings_per_city =
      m.city_count ? static_cast<double>(m.building_count) / m.city_count : 0;
  m.item_count = static_cast<int>(w.items.size());
  for (const auto& [id, item] : w.items) {
    if (item.kind == ItemKind::kBook) ++m.book_count;
    if (item.kind == ItemKind::kKey) ++m.key_count;
  }
  for (const auto& [id, b] : w.buildings) {
    if (b.lock) ++m.locked_building_count;
  }
  m.npc_count = static_cast<int>(w.npcs.size());
  for (const auto& [id, npc] : w.npcs) {
    if (npc.source) ++m.real_npc_count;
  }
  m.real_npc_ratio =
      m.npc_count ? static_cast<double>(m.real_npc_count) / m.npc_count : 0;
  for (const auto& [id, tree] : w.dialogs) {
    m.dialog_node_count += static_cast<int>(tree.nodes.size());
    for (const auto& [topic, ids] : tree.side_branches) {
      ++m.side_branch_counts[std::string(DialogTopicName(topic))];
    }
  }
  m.dialog_nodes_per_npc =
      m.npc_count ? static_cast<double>(m.dialog_node_count) / m.npc_count : 0;
  return m;
}

const std::vector<std::string>& MetricColumns() {
  static const std::vector<std::string> kColumns = {
      "treeSize",         "pathLengthPerSuspect", "cityCount",
      "buildingCount",    "buildingsPerCity",     "itemCount",
      "bookCount",        "keyCount",             "lockedBuildingCount",
      "npcCount",         "realNpcCount",         "realNpcRatio",
      "dialogNodeCount",  "dialogNodesPerNpc",    "sideBranchCounts"};
  return kColumns;
}

double MetricValue(const Metrics& m, const std::string& column) {
  if (column == "treeSize") return m.tree_size;
  if (column == "pathLengthPerSuspect") {
    if (m.path_length_per_suspect.empty()) return 0;
    return std::accumulate(m.path_length_per_suspect.begin(),
                           m.path_length_per_suspect.end(), 0.0) /
           m.path_length_per_suspect.size();
  }
  if (column == "cityCount") return m.city_count;
  if (column == "buildingCount") return m.building_count;
  if (column == "buildingsPerCity") return m.buildings_per_city;
  if (column == "itemCount") return m.item_count;
  if (column == "bookCount") return m.book_count;
  if (column == "keyCount") return m.key_count;
  if (column == "lockedBuildingCount") return m.locked_building_count;
  if (column == "npcCount") return m.npc_count;
  if (column == "realNpcCount") return m.real_npc_count;
  if (column == "realNpcRatio") return m.real_npc_ratio;
  if (column == "dialogNodeCount") return m.dialog_node_count;
  if (column == "dialogNodesPerNpc") return m.dialog_nodes_per_npc;
  if (column == "sideBranchCounts") {
    int total = 0;
    for (const auto& [topic, count] : m.side_branch_counts) total += count;
    return total;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown metric " + column);
}

MetricsAggregate AggregateMetrics(const std::vector<Metrics>& batch) {
  MetricsAggregate agg;
  agg.games = batch.size();
  if (batch.empty()) return agg;
  for (const std::string& column : MetricColumns()) {
    double sum = 0;
    double lo = MetricValue(batch.front(), column);
    double hi = lo;
    for (const Metrics& m : batch) {
      double v = MetricValue(m, column);
      sum += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    agg.mean[column] = sum / batch.size();
    agg.min[column] = lo;
    agg.max[column] = hi;
  }
  return agg;
}

std::string MetricsCsv(const std::vector<std::string>& names,
                       const std::vector<Metrics>& batch) {
  std::ostringstream out;
  out << "game";
  for (const auto& c : MetricColumns()) out << "," << c;
  out << "\n";
  for (size_t i = 0; i < batch.size(); ++i) {
    out << (i < names.size() ? names[i] : std::to_string(i));
    for (const auto& c : MetricColumns()) out << "," << CellText(batch[i], c);
    out << "\n";
  }
  MetricsAggregate agg = AggregateMetrics(batch);
  for (const auto& [label, row] :
       {std::pair{"mean", &agg.mean}, std::pair{"min", &agg.min},
        std::pair{"max", &agg.max}}) {
    if (batch.empty()) break;
    out << label;
    for (const auto& c : MetricColumns()) out << "," << FormatNumber(row->at(c));
    out << "\n";
  }
  return out.str();
}

ojson MetricsJson(const std::vector<std::string>& names,
                  const std::vector<Metrics>& batch) {
  ojson games = ojson::array();
  for (size_t i = 0; i < batch.size(); ++i) {
    const Metrics& m = batch[i];
    ojson side = ojson::object();
    for (const auto& [topic, count] : m.side_branch_counts) side[topic] = count;
    games.push_back(ojson{
        {"game", i < names.size() ? names[i] : std::to_string(i)},
        {"treeSize", m.tree_size},
        {"pathLengthPerSuspect", m.path_length_per_suspect},
        {"cityCount", m.city_count},
        {"buildingCount", m.building_count},
        {"buildingsPerCity", m.buildings_per_city},
        {"itemCount", m.item_count},
        {"bookCount", m.book_count},
        {"keyCount", m.key_count},
        {"lockedBuildingCount", m.locked_building_count},
        {"npcCount", m.npc_count},
        {"realNpcCount", m.real_npc_count},
        {"realNpcRatio", m.real_npc_ratio},
        {"dialogNodeCount", m.dialog_node_count},
        {"dialogNodesPerNpc", m.dialog_nodes_per_npc},
        {"sideBranchCounts", side}});
  }
  MetricsAggregate agg = AggregateMetrics(batch);
  ojson aggregate = ojson::object();
  for (const auto& [label, row] :
       {std::pair{"mean", &agg.mean}, std::pair{"min", &agg.min},
        std::pair{"max", &agg.max}}) {
    ojson values = ojson::object();
    for (const auto& c : MetricColumns()) {
      if (row->count(c)) values[c] = row->at(c);
    }
    aggregate[label] = values;
  }
  return ojson{{"games", games}, {"aggregate", aggregate}};
}

}  // namespace mystery

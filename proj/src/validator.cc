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

#include "mystery/validator.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "mystery/dialog.h"

namespace mystery {
namespace {

class Checker {
 public:
  explicit Checker(const GameDefinition& def)
      : def_(def), world_(def.world) {}

  ValidationReport Run() {
    CheckReferences();
    CheckTriggers();
    CheckPuzzles();
    CheckSolution();
    CheckDialogs();
    return std::move(report_);
  }

 private:
  void Fail(const std::string& check, const std::string& detail) {
    report_.violations.push_back(Violation{check, detail});
  }

  bool IsObject(const std::string& id) const {
    ObjectKind kind = world_.KindOf(id);
    return kind != ObjectKind::kUnknown && kind != ObjectKind::kDialogNode;
  }

  void CheckReferences() {
    if (!world_.cities.count(world_.start_city)) {
      Fail("reference", "start city " + world_.start_city + " missing");
    }
    auto start = world_.buildings.find(world_.start_building);
    if (start == world_.buildings.end()) {
      Fail("reference", "start building " + world_.start_building +
                            " missing");
    } else if (start->second.city_id != world_.start_city) {
      Fail("reference", "start building is not in the start city");
    }
    for (const std::string& id : world_.initial) {
      if (!IsObject(id)) Fail("reference", "initial object " + id + " missing");
    }
    for (const auto& [id, city] : world_.cities) {
      if (city.buildings.empty()) {
        Fail("city-has-building", id + " has no building");
      }
      for (const auto& b : city.buildings) {
        auto it = world_.buildings.find(b);
        if (it == world_.buildings.end() || it->second.city_id != id) {
          Fail("reference", id + " lists building " + b +
                                " that does not belong to it");
        }
      }
      for (const auto& t : city.activates) {
        if (!IsObject(t)) Fail("reference", id + " activates unknown " + t);
      }
      if (city.coordinates.latitude < -90 || city.coordinates.latitude > 90 ||
          city.coordinates.longitude < -180 ||
          city.coordinates.longitude > 180) {
        Fail("coordinates", id + " has invalid coordinates");
      }
    }
    for (const auto& [id, b] : world_.buildings) {
      auto city = world_.cities.find(b.city_id);
      if (city == world_.cities.end()) {
        Fail("reference", id + " belongs to unknown city " + b.city_id);
      } else if (std::count(city->second.buildings.begin(),
                            city->second.buildings.end(), id) != 1) {
        Fail("reference", id + " is not listed exactly once by its city");
      }
      for (const auto& n : b.occupants) {
        auto it = world_.npcs.find(n);
        if (it == world_.npcs.end() || it->second.building_id != id) {
          Fail("reference", id + " lists occupant " + n + " inconsistently");
        }
      }
      for (const auto& i : b.items) {
        auto it = world_.items.find(i);
        if (it == world_.items.end() || it->second.building_id != id) {
          Fail("reference", id + " lists item " + i + " inconsistently");
        }
      }
      for (const auto& t : b.activates) {
        if (!IsObject(t)) Fail("reference", id + " activates unknown " + t);
      }
    }
    for (const auto& [id, n] : world_.npcs) {
      auto b = world_.buildings.find(n.building_id);
      if (b == world_.buildings.end() ||
          std::count(b->second.occupants.begin(), b->second.occupants.end(),
                     id) != 1) {
        Fail("reference", id + " is not housed in " + n.building_id);
      }
      auto tree = world_.dialogs.find(n.dialog_tree_id);
      if (tree == world_.dialogs.end() || tree->second.npc_id != id) {
        Fail("dialog-tree", id + " has no dialog tree");
      }
      for (const auto& t : n.clue_targets) {
        if (!IsObject(t)) Fail("reference", id + " points at unknown " + t);
      }
      if (!n.is_red_herring && !n.source && n.clue_targets.empty()) {
        Fail("npc-role", id + " is neither real nor clue-bearing");
      }
      if (n.is_red_herring && !n.clue_targets.empty()) {
        Fail("red-herring", id + " carries a clue");
      }
    }
    for (const auto& [id, it] : world_.items) {
      auto b = world_.buildings.find(it.building_id);
      if (b == world_.buildings.end() ||
          std::count(b->second.items.begin(), b->second.items.end(), id) !=
              1) {
        Fail("reference", id + " is not housed in " + it.building_id);
      }
      if ((it.kind == ItemKind::kKey) != it.key_type.has_value()) {
        Fail("item-kind", id + " key kind and key type disagree");
      }
      for (const auto& t : it.reveals) {
        if (!IsObject(t)) Fail("reference", id + " reveals unknown " + t);
      }
    }
    for (const auto& [node, object] : world_.node_objects) {
      if (node < 0 || static_cast<size_t>(node) >= world_.plot.size()) {
        Fail("world-complete", "object map names unknown node " +
                                   std::to_string(node));
      } else if (!IsObject(object)) {
        Fail("world-complete", "tree node " + std::to_string(node) +
                                   " maps to unknown " + object);
      }
    }
    for (size_t i = 0; i < world_.plot.size(); ++i) {
      if (!world_.node_objects.count(static_cast<int>(i))) {
        Fail("world-complete", "tree node " + std::to_string(i) +
                                   " has no object");
      }
    }
  }

  void CheckTriggers() {
    const TriggerGraph& g = def_.triggers;
    for (const auto& e : g.edges) {
      if (world_.KindOf(e.source) == ObjectKind::kUnknown ||
          world_.KindOf(e.target) == ObjectKind::kUnknown) {
        Fail("reference", "trigger edge " + e.source + " -> " + e.target +
                              " has an unknown endpoint");
      }
      if (e.kind == TriggerKind::kTalk || e.kind == TriggerKind::kDialog) {
        auto npc = world_.npcs.find(e.source);
        if (npc != world_.npcs.end() && npc->second.is_red_herring) {
          Fail("red-herring", e.source + " is a progression source");
        }
      }
    }
    if (!TriggerGraphIsAcyclic(g)) {
      Fail("trigger-acyclic", "trigger graph has a cycle");
    }
    TriggerGraph derived = DeriveTriggerGraph(world_);
    TriggerGraph stored = g;
    std::sort(stored.edges.begin(), stored.edges.end());
    if (stored.edges != derived.edges || stored.initial != derived.initial) {
      Fail("trigger-consistency",
           "trigger graph does not match the clues in the world");
    }
    DepthMap depths = SimulateDepths(world_);
    auto require = [&](const std::string& id) {
      if (!depths.shown.count(id)) {
        Fail("reachability", id + " (" + world_.Label(id) +
                                 ") is never revealed");
      }
    };
    for (const auto& [id, c] : world_.cities) require(id);
    for (const auto& [id, b] : world_.buildings) require(id);
    for (const auto& [id, n] : world_.npcs) require(id);
    for (const auto& [id, it] : world_.items) require(id);
  }

  void CheckPuzzles() {
    const PuzzlePlacement& p = def_.puzzles;
    DepthMap depths = SimulateDepths(world_);
    auto depth_of = [&](const std::string& building) {
      auto it = depths.shown.find(building);
      return it == depths.shown.end() ? -1 : it->second;
    };
    if (p.keys.size() < p.locks.size()) {
      Fail("keys >= locks", std::to_string(p.keys.size()) + " keys for " +
                                std::to_string(p.locks.size()) + " locks");
    }
    for (const auto& k : p.keys) {
      auto item = world_.items.find(k.item_id);
      if (item == world_.items.end() || item->second.kind != ItemKind::kKey ||
          item->second.key_type != k.key_type ||
          item->second.building_id != k.building_id) {
        Fail("key-exists", "key " + k.item_id + " is missing from " +
                               k.building_id);
        continue;
      }
      if (depth_of(k.building_id) != k.depth) {
        Fail("depth", "key " + k.item_id + " recorded at depth " +
                          std::to_string(k.depth) + ", simulated " +
                          std::to_string(depth_of(k.building_id)));
      }
    }
    std::set<std::string> listed;
    for (const auto& l : p.locks) {
      listed.insert(l.building_id);
      auto b = world_.buildings.find(l.building_id);
      if (b == world_.buildings.end() || b->second.lock != l.lock_type) {
        Fail("lock-consistency", "lock on " + l.building_id +
                                     " does not match the building");
        continue;
      }
      if (l.building_id == world_.start_building) {
        Fail("start-unlocked", "the starting building is locked");
      }
      int lock_depth = depth_of(l.building_id);
      if (lock_depth != l.depth) {
        Fail("depth", "lock on " + l.building_id + " recorded at depth " +
                          std::to_string(l.depth) + ", simulated " +
                          std::to_string(lock_depth));
      }
      bool ok = false;
      for (const auto& k : p.keys) {
        auto item = world_.items.find(k.item_id);
        if (item == world_.items.end() || !item->second.key_type) continue;
        if (LockOpenedBy(*item->second.key_type) != l.lock_type) continue;
        int key_depth = depth_of(item->second.building_id);
        if (key_depth >= 0 && key_depth < lock_depth &&
            item->second.building_id != l.building_id) {
          ok = true;
        }
      }
      if (!ok) {
        Fail("key-depth < lock-depth",
             "no matching key at a depth below the lock on " + l.building_id);
      }
    }
    for (const auto& [id, b] : world_.buildings) {
      if (b.lock && !listed.count(id)) {
        Fail("lock-consistency", id + " is locked without a placement");
      }
    }
  }

  void CheckSolution() {
    const SuspectPuzzle& s = def_.solution;
    std::set<std::string> suspects;
    for (const auto& ref : s.suspects) suspects.insert(ref.iri);
    if (suspects.size() != s.suspects.size()) {
      Fail("suspects-distinct", "a suspect appears twice");
    }
    if (!suspects.count(s.culprit.iri)) {
      Fail("culprit-is-suspect", s.culprit.label + " is not a suspect");
    }
    if (s.evidence.size() + 1 != s.suspects.size()) {
      Fail("evidence-count", std::to_string(s.evidence.size()) +
                                 " evidence triples for " +
                                 std::to_string(s.suspects.size()) +
                                 " suspects");
    }
    std::set<std::string> covered;
    std::set<std::string> characteristics;
    const auto culprit_values = s.suspect_values.find(s.culprit.iri);
    for (const auto& e : s.evidence) {
      if (e.suspect.iri == s.culprit.iri) {
        Fail("culprit-in-evidence",
             "the culprit " + s.culprit.label + " appears in an evidence triple");
        continue;
      }
      if (!suspects.count(e.suspect.iri)) {
        Fail("evidence-suspect", e.suspect.label + " is not a suspect");
      }
      if (!covered.insert(e.suspect.iri).second) {
        Fail("evidence-suspect", e.suspect.label + " has two triples");
      }
      if (!characteristics.insert(e.characteristic).second) {
        Fail("evidence-characteristic",
             e.characteristic + " is used by two triples");
      }
      auto own = s.suspect_values.find(e.suspect.iri);
      bool holds = own != s.suspect_values.end() &&
                   own->second.count(e.characteristic) &&
                   own->second.at(e.characteristic).count(e.value);
      if (!holds) {
        Fail("evidence-held", e.suspect.label + " does not hold " +
                                  e.characteristic + " = " + e.value);
      }
      if (culprit_values != s.suspect_values.end()) {
        auto c = culprit_values->second.find(e.characteristic);
        if (c != culprit_values->second.end() && c->second.count(e.value)) {
          Fail("evidence-excludes-culprit",
               "the culprit shares " + e.characteristic + " = " + e.value);
        }
      }
    }
    std::set<std::string> leaves;
    for (int leaf : world_.plot.suspect_leaves) {
      if (leaf >= 0 && static_cast<size_t>(leaf) < world_.plot.size()) {
        leaves.insert(world_.plot.nodes[leaf].entity.iri);
      }
    }
    if (leaves != suspects) {
      Fail("suspect-leaves", "plot tree leaves differ from the suspects");
    }
    std::set<EvidenceTriple> told;
    for (const auto& [id, tree] : world_.dialogs) {
      for (const auto& [node_id, node] : tree.nodes) {
        if (node.evidence) told.insert(*node.evidence);
      }
    }
    for (const auto& e : s.evidence) {
      if (!told.count(e)) {
        Fail("evidence-told", "no dialog gives the evidence for " +
                                  e.suspect.label);
      }
    }
  }

  void CheckDialogs() {
    auto residue = [&](const std::string& where, const std::string& text) {
      if (HasResidualPlaceholder(text)) {
        Fail("placeholder-residue", where + ": " + text);
      }
    };
    for (const auto& [id, item] : world_.items) residue(id, item.text);
    for (const auto& [id, tree] : world_.dialogs) {
      if (!world_.npcs.count(tree.npc_id)) {
        Fail("dialog-tree", id + " belongs to unknown " + tree.npc_id);
      }
      auto root = tree.nodes.find(tree.root_id);
      if (root == tree.nodes.end()) {
        Fail("dialog-tree", id + " has no root");
        continue;
      }
      if (root->second.text != kGreeting || root->second.children.empty()) {
        Fail("dialog-root", id + " root is not a greeting with children");
      }
      std::map<std::string, int> parents;
      for (const auto& [node_id, node] : tree.nodes) {
        residue(node_id, node.text);
        for (const auto& c : node.children) {
          if (!tree.nodes.count(c)) {
            Fail("dialog-tree", node_id + " has unknown child " + c);
          }
          ++parents[c];
        }
        for (const auto& t : node.reveal_effects) {
          if (!IsObject(t)) {
            Fail("reference", node_id + " reveals unknown " + t);
          }
        }
      }
      std::set<std::string> seen;
      std::vector<std::string> stack = {tree.root_id};
      while (!stack.empty()) {
        std::string n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second) continue;
        auto it = tree.nodes.find(n);
        if (it == tree.nodes.end()) continue;
        for (const auto& c : it->second.children) stack.push_back(c);
      }
      bool shaped = parents[tree.root_id] == 0 && seen.size() == tree.nodes.size();
      for (const auto& [node_id, count] : parents) shaped = shaped && count <= 1;
      if (!shaped) Fail("dialog-acyclic", id + " is not a tree");
      if (tree.main_branch.empty()) {
        Fail("dialog-main", id + " has no main branch");
      }
      if (tree.side_branches.size() > 2) {
        Fail("dialog-side", id + " has more than two side topics");
      }
      for (const auto& [topic, ids] : tree.side_branches) {
        size_t expected = topic == DialogTopic::kBirth ? 2 : 1;
        if (ids.size() != expected) {
          Fail("dialog-side", id + " topic " +
                                  std::string(DialogTopicName(topic)) +
                                  " has " + std::to_string(ids.size()) +
                                  " nodes");
        }
        for (const auto& n : ids) {
          auto it = tree.nodes.find(n);
          if (it == tree.nodes.end() || !it->second.reveal_effects.empty()) {
            Fail("dialog-side", n + " is not a plain side node");
          }
        }
      }
    }
  }

  const GameDefinition& def_;
  const World& world_;
  ValidationReport report_;
};

}  // namespace

bool ValidationReport::Has(const std::string& check) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.check == check; });
}

std::string ValidationReport::ToString() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += v.check + ": " + v.detail;
  }
  return out;
}

bool TriggerGraphIsAcyclic(const TriggerGraph& graph) {
  std::map<std::string, std::vector<std::string>> next;
  std::map<std::string, int> indegree;
  for (const auto& e : graph.edges) {
    next[e.source].push_back(e.target);
    indegree[e.source];
    ++indegree[e.target];
  }
  std::queue<std::string> ready;
  for (const auto& [node, d] : indegree) {
    if (d == 0) ready.push(node);
  }
  size_t removed = 0;
  while (!ready.empty()) {
    std::string n = ready.front();
    ready.pop();
    ++removed;
    for (const auto& m : next[n]) {
      if (--indegree[m] == 0) ready.push(m);
    }
  }
  return removed == indegree.size();
}

ValidationReport ValidateDefinition(const GameDefinition& def) {
  return Checker(def).Run();
}

}  // namespace mystery

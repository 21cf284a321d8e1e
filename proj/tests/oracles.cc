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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mystery::oracle {

namespace {

const std::set<std::string>& ValuesFor(const Characteristics& row,
                                       const std::string& name) {
  static const std::set<std::string> kNone;
  auto it = row.find(name);
  return it == row.end() ? kNone : it->second;
}

bool ValidPair(const Characteristics& innocent, const Characteristics& killer,
               const std::string& characteristic) {
  const auto& k = ValuesFor(killer, characteristic);
  if (k.empty()) return false;
  for (const auto& v : ValuesFor(innocent, characteristic)) {
    if (!k.count(v)) return true;
  }
  return false;
}

}  // namespace

double DiversityBySummation(const std::vector<Characteristics>& rows,
                            const std::vector<std::string>& characteristics) {
  double total = 0.0;
  for (const std::string& c : characteristics) {
    int q = 0;
    std::map<std::string, int> holders;
    for (const auto& row : rows) {
      const auto& values = ValuesFor(row, c);
      if (values.empty()) continue;
      ++q;
      for (const auto& v : values) holders[v] += 1;
    }
    if (q == 0) continue;
    double entropy = 0.0;
    for (const auto& [value, count] : holders) {
      double p = static_cast<double>(count) / q;
      entropy -= p * std::log2(p);
    }
    total += q * entropy;
  }
  return total;
}

namespace {

// Best pair count for one killer over every bijection between the
// characteristics and the innocents padded with "nobody" slots.
int KillerDepth(const std::vector<Characteristics>& rows,
                const std::vector<std::string>& characteristics, int killer) {
  std::vector<int> innocents;
  for (int s = 0; s < static_cast<int>(rows.size()); ++s) {
    if (s != killer) innocents.push_back(s);
  }
  const int m = static_cast<int>(characteristics.size());
  const int slots = std::max(m, static_cast<int>(innocents.size()));
  std::vector<int> order(slots);
  std::iota(order.begin(), order.end(), 0);
  int best = 0;
  do {
    int count = 0;
    for (int c = 0; c < m; ++c) {
      const int slot = order[c];
      if (slot < static_cast<int>(innocents.size()) &&
          ValidPair(rows[innocents[slot]], rows[killer], characteristics[c])) {
        ++count;
      }
    }
    best = std::max(best, count);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

PairingDepth DepthByEnumeration(
    const std::vector<Characteristics>& rows,
    const std::vector<std::string>& characteristics) {
  PairingDepth best;
  for (int killer = 0; killer < static_cast<int>(rows.size()); ++killer) {
    const int depth = KillerDepth(rows, characteristics, killer);
    if (best.killer < 0 || depth > best.depth) {
      best.depth = depth;
      best.killer = killer;
    }
  }
  return best;
}

std::vector<Characteristics> RandomTable(Rng& rng, int suspects,
                                         int characteristics, int values) {
  std::vector<Characteristics> rows(suspects);
  for (auto& row : rows) {
    for (int c = 0; c < characteristics; ++c) {
      std::set<std::string> held;
      for (int v = 0; v < values; ++v) {
        if (rng.Chance(0.4)) held.insert("v" + std::to_string(v));
      }
      if (!held.empty()) row["c" + std::to_string(c)] = held;
    }
  }
  return rows;
}

std::vector<Path> AllSimplePaths(KnowledgeStore& store, const EntityRef& from,
                                 const EntityRef& to, int max_nodes) {
  std::vector<Path> out;
  Path current;
  EntityRef start = store.EntityFacts(from).ref;
  current.nodes.push_back(start);
  current.kinds.push_back(store.EntityFacts(start).kind);
  current.major_nodes.push_back(true);
  std::function<void()> grow = [&]() {
    const EntityRef here = current.nodes.back();
    if (here.iri == to.iri) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.nodes.size()) == max_nodes) return;
    for (const Link& link : store.Links(here)) {
      const bool forward = link.from.iri == here.iri;
      const EntityRef& next = forward ? link.to : link.from;
      if (next.iri == here.iri) continue;
      bool used = false;
      for (const auto& n : current.nodes) used |= n.iri == next.iri;
      if (used) continue;
      current.nodes.push_back(next);
      current.kinds.push_back(store.EntityFacts(next).kind);
      current.major_nodes.push_back(true);
      current.edges.push_back(
          {link.predicate,
           forward ? EdgeDirection::kForward : EdgeDirection::kBackward,
           false});
      grow();
      current.nodes.pop_back();
      current.kinds.pop_back();
      current.major_nodes.pop_back();
      current.edges.pop_back();
    }
  };
  grow();
  return out;
}

double ScoreByFrequency(const Path& path, const std::vector<Path>& all) {
  std::map<int, int> kinds;
  std::map<std::string, int> predicates;
  int node_count = 0;
  int edge_count = 0;
  for (const Path& p : all) {
    for (EntityKind k : p.kinds) {
      ++kinds[static_cast<int>(k)];
      ++node_count;
    }
    for (const PathEdge& e : p.edges) {
      ++predicates[e.predicate];
      ++edge_count;
    }
  }
  double info = 0.0;
  int terms = 0;
  for (EntityKind k : path.kinds) {
    info += -std::log2(static_cast<double>(kinds[static_cast<int>(k)]) /
                       node_count);
    ++terms;
  }
  for (const PathEdge& e : path.edges) {
    info += -std::log2(static_cast<double>(predicates[e.predicate]) /
                       edge_count);
    ++terms;
  }
  return static_cast<double>(path.nodes.size()) + (terms ? info / terms : 0.0);
}

std::set<std::string> ReachableObjects(const TriggerGraph& graph) {
  std::multimap<std::string, std::string> next;
  for (const TriggerEdge& e : graph.edges) next.emplace(e.source, e.target);
  std::set<std::string> seen(graph.initial.begin(), graph.initial.end());
  std::deque<std::string> queue(graph.initial.begin(), graph.initial.end());
  while (!queue.empty()) {
    std::string at = queue.front();
    queue.pop_front();
    auto [lo, hi] = next.equal_range(at);
    for (auto it = lo; it != hi; ++it) {
      if (seen.insert(it->second).second) queue.push_back(it->second);
    }
  }
  return seen;
}

namespace {

std::string StateKey(const GameState& s) {
  std::ostringstream key;
  auto put = [&key](const std::set<std::string>& items) {
    for (const auto& i : items) key << i << ',';
    key << '|';
  };
  put(s.reveal.shown);
  put(s.reveal.activated);
  put(s.visited_dialog);
  put(s.observed);
  put(s.inventory);
  put(s.unlocked);
  for (const auto& e : s.discovered_evidence) {
    key << e.suspect.iri << '/' << e.characteristic << '/' << e.value << ',';
  }
  key << '|' << s.current_city << '|' << s.current_building;
  return key.str();
}

}  // namespace

int MinimalWinningSteps(const Engine& engine, size_t state_cap) {
  const auto& evidence = engine.definition().solution.evidence;
  auto done = [&evidence](const GameState& s) {
    for (const auto& e : evidence) {
      if (!s.discovered_evidence.count(e)) return false;
    }
    return true;
  };
  GameState start = engine.NewSession("oracle");
  if (done(start)) return 1;
  std::unordered_set<std::string> seen{StateKey(start)};
  std::deque<std::pair<GameState, int>> queue;
  queue.emplace_back(std::move(start), 0);
  while (!queue.empty() && seen.size() < state_cap) {
    auto [state, steps] = std::move(queue.front());
    queue.pop_front();
    for (const Action& action : engine.AvailableActions(state)) {
      if (action.type == ActionType::kIssueWarrant) continue;
      GameState next = state;
      next.events.clear();
      next.log.clear();
      engine.Apply(next, action);
      if (done(next)) return steps + 2;
      if (seen.insert(StateKey(next)).second) {
        queue.emplace_back(std::move(next), steps + 1);
      }
    }
  }
  return -1;
}

}  // namespace mystery::oracle

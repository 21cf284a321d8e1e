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

#include "mystery/paths.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "mystery/errors.h"

namespace mystery {

namespace {

struct Neighbour {
  EntityRef entity;
  PathEdge edge;

  auto operator<=>(const Neighbour&) const = default;
};

class LinkGraph {
 public:
  LinkGraph(KnowledgeStore& store, size_t cap) : store_(store), cap_(cap) {}

  const std::vector<Neighbour>& Neighbours(const EntityRef& node) {
    auto it = cache_.find(node.iri);
    if (it != cache_.end()) return it->second;
    std::vector<Neighbour> out;
    for (const Link& link : store_.Links(node)) {
      const bool forward = link.from.iri == node.iri;
      const EntityRef& other = forward ? link.to : link.from;
      if (other.iri == node.iri) continue;
      out.push_back({other,
                     {link.predicate,
                      forward ? EdgeDirection::kForward
                              : EdgeDirection::kBackward,
                      false}});
    }
    std::sort(out.begin(), out.end());
    if (out.size() > cap_) out.resize(cap_);
    return cache_.emplace(node.iri, std::move(out)).first->second;
  }

  EntityKind Kind(const EntityRef& node) {
    auto it = kinds_.find(node.iri);
    if (it != kinds_.end()) return it->second;
    EntityKind kind = store_.EntityFacts(node).kind;
    kinds_.emplace(node.iri, kind);
    return kind;
  }

 private:
  KnowledgeStore& store_;
  size_t cap_;
  std::map<std::string, std::vector<Neighbour>> cache_;
  std::map<std::string, EntityKind> kinds_;
};

// Hop distance to `target`, explored backwards up to `radius` edges.
std::map<std::string, int> DistancesTo(LinkGraph& graph,
                                       const EntityRef& target, int radius) {
  std::map<std::string, int> dist{{target.iri, 0}};
  std::deque<EntityRef> queue{target};
  while (!queue.empty()) {
    EntityRef node = queue.front();
    queue.pop_front();
    const int d = dist[node.iri];
    if (d >= radius) continue;
    for (const auto& n : graph.Neighbours(node)) {
      if (dist.emplace(n.entity.iri, d + 1).second) queue.push_back(n.entity);
    }
  }
  return dist;
}

bool LexLess(const Path& a, const Path& b) {
  if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
  for (size_t i = 0; i < a.nodes.size(); ++i) {
    if (a.nodes[i].iri != b.nodes[i].iri) return a.nodes[i].iri < b.nodes[i].iri;
  }
  return a.edges < b.edges;
}

Path Pick(std::vector<Path> candidates, const PathWeights& weights,
          const EntityRef& from, const EntityRef& to) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoPathFound, from.iri + " -> " + to.iri);
  }
  return candidates[BestPathIndex(candidates, weights)];
}

}  // namespace

std::vector<Path> EnumeratePaths(const EntityRef& from, const EntityRef& to,
                                 KnowledgeStore& store,
                                 const PathSearchOptions& options) {
  if (from.iri == to.iri) {
    throw Error(ErrorCode::kInvalidArgument, "path endpoints coincide");
  }
  if (options.max_nodes < 2) {
    throw Error(ErrorCode::kInvalidArgument, "max_nodes must be >= 2");
  }
  LinkGraph graph(store, options.frontier_cap);
  const EntityRef source = store.EntityFacts(from).ref;
  const EntityRef target = store.EntityFacts(to).ref;
  const auto dist = DistancesTo(graph, target, options.max_nodes - 1);

  std::vector<Path> out;
  Path current;
  current.nodes.push_back(source);
  current.kinds.push_back(graph.Kind(source));
  current.major_nodes.push_back(true);
  std::set<std::string> on_path{source.iri};

  // Iterative deepening would revisit the same prefixes; a depth-bounded DFS
  // pruned by the backward distances enumerates the same set exactly once.
  auto dfs = [&](auto&& self, const EntityRef& node) -> void {
    if (out.size() >= options.candidate_cap) return;
    const int used = static_cast<int>(current.nodes.size());
    for (const auto& n : graph.Neighbours(node)) {
      if (on_path.count(n.entity.iri)) continue;
      auto d = dist.find(n.entity.iri);
      if (d == dist.end() || used + 1 + d->second > options.max_nodes) continue;
      current.nodes.push_back(n.entity);
      current.kinds.push_back(graph.Kind(n.entity));
      current.edges.push_back(n.edge);
      current.major_nodes.push_back(true);
      if (n.entity.iri == target.iri) {
        out.push_back(current);
      } else {
        on_path.insert(n.entity.iri);
        self(self, n.entity);
        on_path.erase(n.entity.iri);
      }
      current.nodes.pop_back();
      current.kinds.pop_back();
      current.edges.pop_back();
      current.major_nodes.pop_back();
      if (out.size() >= options.candidate_cap) return;
    }
  };
  dfs(dfs, source);
  return out;
}

PathScore ScorePath(const Path& path, const std::vector<Path>& candidates,
                    const PathWeights& weights) {
  std::map<EntityKind, double> kind_counts;
  std::map<std::string, double> predicate_counts;
  double node_total = 0.0;
  double edge_total = 0.0;
  for (const Path& candidate : candidates) {
    for (EntityKind k : candidate.kinds) {
      kind_counts[k] += 1.0;
      node_total += 1.0;
    }
    for (const PathEdge& e : candidate.edges) {
      predicate_counts[e.predicate] += 1.0;
      edge_total += 1.0;
    }
  }
  auto self_information = [](double count, double total) {
    return count > 0.0 ? -std::log2(count / total) : 0.0;
  };
  double sum = 0.0;
  double weight = 0.0;
  for (EntityKind k : path.kinds) {
    sum += weights.node_types * self_information(kind_counts[k], node_total);
    weight += weights.node_types;
  }
  for (const PathEdge& e : path.edges) {
    sum += weights.edge_types *
           self_information(predicate_counts[e.predicate], edge_total);
    weight += weights.edge_types;
  }
  PathScore score;
  score.length_term = static_cast<double>(path.length());
  score.uniqueness_term = weight > 0.0 ? sum / weight : 0.0;
  score.total = weights.length * score.length_term +
                weights.uniqueness * score.uniqueness_term;
  return score;
}

size_t BestPathIndex(const std::vector<Path>& candidates,
                     const PathWeights& weights) {
  size_t best = 0;
  double best_total = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < candidates.size(); ++i) {
    const double total = ScorePath(candidates[i], candidates, weights).total;
    constexpr double kTieEpsilon = 1e-12;
    if (total > best_total + kTieEpsilon ||
        (std::abs(total - best_total) <= kTieEpsilon &&
         LexLess(candidates[i], candidates[best]))) {
      best = i;
      best_total = std::max(best_total, total);
    }
  }
  return best;
}

Path FindMajorPath(const EntityRef& victim, const EntityRef& suspect,
                   KnowledgeStore& store, const PathSearchOptions& options) {
  return Pick(EnumeratePaths(victim, suspect, store, options), options.weights,
              victim, suspect);
}

Path ExpandMinorPaths(const Path& major, KnowledgeStore& store,
                      const PathSearchOptions& options) {
  Path out;
  if (major.nodes.empty()) return out;
  auto append = [&out](const EntityRef& node, EntityKind kind,
                       const PathEdge* edge, bool major_node) {
    for (size_t j = 0; j < out.nodes.size(); ++j) {
      if (out.nodes[j].iri == node.iri) {
        // Collapse the loop: keep the first occurrence.
        out.nodes.resize(j + 1);
        out.kinds.resize(j + 1);
        out.major_nodes.resize(j + 1);
        out.major_nodes[j] = out.major_nodes[j] || major_node;
        out.edges.resize(j);
        return;
      }
    }
    if (edge != nullptr) out.edges.push_back(*edge);
    out.nodes.push_back(node);
    out.kinds.push_back(kind);
    out.major_nodes.push_back(major_node);
  };

  append(major.nodes[0], major.kinds[0], nullptr, true);
  for (size_t i = 0; i + 1 < major.nodes.size(); ++i) {
    const EntityRef& a = major.nodes[i];
    const EntityRef& b = major.nodes[i + 1];
    auto candidates = EnumeratePaths(a, b, store, options);
    std::optional<Path> minor;
    if (!candidates.empty()) {
      Path best = candidates[BestPathIndex(candidates, options.weights)];
      if (best.length() > 2) minor = std::move(best);
    }
    if (!minor) {
      append(b, major.kinds[i + 1], &major.edges[i], true);
      continue;
    }
    for (size_t k = 1; k < minor->nodes.size(); ++k) {
      PathEdge edge = minor->edges[k - 1];
      edge.minor = true;
      const bool is_end = k + 1 == minor->nodes.size();
      append(minor->nodes[k], minor->kinds[k], &edge, is_end);
    }
  }
  return out;
}

std::vector<int> PlotTree::PathTo(int node) const {
  std::vector<int> out;
  for (int at = node; at >= 0; at = nodes[at].parent) out.push_back(at);
  std::reverse(out.begin(), out.end());
  return out;
}

void PlotTree::Validate() const {
  if (nodes.empty()) throw Error(ErrorCode::kInvalidArgument, "empty tree");
  if (nodes[0].parent != -1) {
    throw Error(ErrorCode::kInvalidArgument, "root has a parent");
  }
  std::vector<int> seen(nodes.size(), 0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int at = stack.back();
    stack.pop_back();
    if (seen[at]++) throw Error(ErrorCode::kInvalidArgument, "cycle in tree");
    for (int child : nodes[at].children) {
      if (nodes[child].parent != at) {
        throw Error(ErrorCode::kInvalidArgument, "parent link mismatch");
      }
      stack.push_back(child);
    }
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::kInvalidArgument, "disconnected node");
    const bool leaf = nodes[i].children.empty() && i != 0;
    const bool suspect = nodes[i].suspect >= 0;
    if (leaf != suspect) {
      throw Error(ErrorCode::kInvalidArgument,
                  "leaf/suspect mismatch at " + nodes[i].entity.iri);
    }
  }
}

PlotTree BuildPlotTree(
    const EntityRef& victim,
    const std::vector<std::pair<EntityRef, Path>>& suspect_paths) {
  std::set<std::string> suspects;
  for (const auto& [suspect, path] : suspect_paths) {
    if (!suspects.insert(suspect.iri).second || suspect.iri == victim.iri) {
      throw Error(ErrorCode::kSuspectCollision, suspect.iri);
    }
    if (path.nodes.size() < 2 || path.nodes.front().iri != victim.iri ||
        path.nodes.back().iri != suspect.iri) {
      throw Error(ErrorCode::kInvalidArgument,
                  "path must run from the victim to " + suspect.iri);
    }
  }

  PlotTree tree;
  PlotNode root;
  root.entity = suspect_paths.empty() ? victim : suspect_paths[0].second.nodes[0];
  root.kind = EntityKind::kPerson;
  tree.nodes.push_back(root);

  for (size_t p = 0; p < suspect_paths.size(); ++p) {
    const Path& path = suspect_paths[p].second;
    int at = 0;
    bool diverged = false;
    for (size_t i = 1; i < path.nodes.size(); ++i) {
      const bool leaf = i + 1 == path.nodes.size();
      int next = -1;
      // Shared prefixes merge; suspect occurrences never do, so every
      // suspect ends up as its own leaf.
      if (!diverged && !leaf && !suspects.count(path.nodes[i].iri)) {
        for (int child : tree.nodes[at].children) {
          const PlotNode& c = tree.nodes[child];
          if (c.entity.iri == path.nodes[i].iri && c.suspect < 0 &&
              c.via == path.edges[i - 1]) {
            next = child;
            break;
          }
        }
      }
      if (next < 0) {
        diverged = true;
        PlotNode node;
        node.id = static_cast<int>(tree.nodes.size());
        node.entity = path.nodes[i];
        node.kind = i < path.kinds.size() ? path.kinds[i] : EntityKind::kOther;
        node.parent = at;
        node.via = path.edges[i - 1];
        node.source_path = static_cast<int>(p);
        node.major = path.major_nodes.empty() || path.major_nodes[i];
        if (leaf) node.suspect = static_cast<int>(p);
        tree.nodes.push_back(node);
        tree.nodes[at].children.push_back(node.id);
        next = node.id;
      }
      at = next;
    }
    tree.suspect_leaves.push_back(at);
  }
  tree.Validate();
  return tree;
}

}  // namespace mystery

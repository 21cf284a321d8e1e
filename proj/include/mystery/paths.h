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

#ifndef MYSTERY_PATHS_H_
#define MYSTERY_PATHS_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mystery/knowledge.h"

namespace mystery {

enum class EdgeDirection { kForward, kBackward };

struct PathEdge {
  std::string predicate;
  EdgeDirection direction = EdgeDirection::kForward;
  // Edge came from a spliced minor path rather than the major path.
  bool minor = false;

  auto operator<=>(const PathEdge&) const = default;
};

struct Path {
  std::vector<EntityRef> nodes;
  std::vector<EntityKind> kinds;  // aligned with nodes
  std::vector<PathEdge> edges;    // edges[i] joins nodes[i] and nodes[i+1]
  std::vector<bool> major_nodes;  // aligned with nodes

  size_t length() const { return nodes.size(); }
  bool operator==(const Path&) const = default;
};

struct PathScore {
  double length_term = 0.0;
  double uniqueness_term = 0.0;
  double total = 0.0;
};

struct PathWeights {
  double length = 1.0;
  double uniqueness = 1.0;
  // Relative weight of node kinds vs. edge predicates inside uniqueness.
  double node_types = 1.0;
  double edge_types = 1.0;
};

struct PathSearchOptions {
  int max_nodes = 5;
  // Per-node neighbour cap, iri-sorted.
  size_t frontier_cap = 200;
  // Stop enumerating after this many candidate paths.
  size_t candidate_cap = 20000;
  PathWeights weights;
};

// All simple paths from `from` to `to` with at most max_nodes nodes, in
// deterministic discovery order.
std::vector<Path> EnumeratePaths(const EntityRef& from, const EntityRef& to,
                                 KnowledgeStore& store,
                                 const PathSearchOptions& options);

PathScore ScorePath(const Path& path, const std::vector<Path>& candidates,
                    const PathWeights& weights = {});

// Index of the preferred candidate: highest total, then longer, then
// lexicographically smaller node iris.
size_t BestPathIndex(const std::vector<Path>& candidates,
                     const PathWeights& weights);

Path FindMajorPath(const EntityRef& victim, const EntityRef& suspect,
                   KnowledgeStore& store,
                   const PathSearchOptions& options = {});

Path ExpandMinorPaths(const Path& major, KnowledgeStore& store,
                      const PathSearchOptions& options = {});

struct PlotNode {
  int id = 0;
  EntityRef entity;
  EntityKind kind = EntityKind::kOther;
  int parent = -1;
  std::vector<int> children;
  PathEdge via;             // edge from the parent
  int source_path = -1;     // index of the suspect path that created the node
  int suspect = -1;         // suspect index when this node is a suspect leaf
  bool major = true;
};

struct PlotTree {
  std::vector<PlotNode> nodes;  // nodes[0] is the victim root
  std::vector<int> suspect_leaves;

  size_t size() const { return nodes.size(); }
  const PlotNode& root() const { return nodes.front(); }
  // Node ids from the root to `node`, inclusive.
  std::vector<int> PathTo(int node) const;
  // Throws kInvalidArgument describing the first broken invariant.
  void Validate() const;
};

PlotTree BuildPlotTree(
    const EntityRef& victim,
    const std::vector<std::pair<EntityRef, Path>>& suspect_paths);

}  // namespace mystery

#endif  // MYSTERY_PATHS_H_

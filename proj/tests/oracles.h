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

#ifndef MYSTERY_TESTS_ORACLES_H_
#define MYSTERY_TESTS_ORACLES_H_

#include <string>
#include <vector>

#include "mystery/engine.h"
#include "mystery/knowledge.h"
#include "mystery/paths.h"
#include "mystery/rng.h"

// Second implementations used to check the library. Each one is written
// from the definition, favouring obviousness over speed.
namespace mystery::oracle {

// f = sum_i Q_i * (-sum_j p_ij log2 p_ij) over the given characteristics.
double DiversityBySummation(const std::vector<Characteristics>& rows,
                            const std::vector<std::string>& characteristics);

struct PairingDepth {
  int depth = 0;
  // Lowest-index killer reaching `depth`.
  int killer = -1;
};

// Max over killers and over every characteristic-to-innocent bijection of
// the number of valid pairs.
PairingDepth DepthByEnumeration(const std::vector<Characteristics>& rows,
                                const std::vector<std::string>& characteristics);

// Random table with `suspects` rows over `characteristics` names, values
// drawn from a domain of `values` strings.
std::vector<Characteristics> RandomTable(Rng& rng, int suspects,
                                         int characteristics, int values);

// All simple paths of at most `max_nodes` nodes, each link usable in either
// direction, found by plain recursive expansion.
std::vector<Path> AllSimplePaths(KnowledgeStore& store, const EntityRef& from,
                                 const EntityRef& to, int max_nodes);

// Mean self-information of the path's node kinds and edge predicates over
// all candidates, plus the node count.
double ScoreByFrequency(const Path& path, const std::vector<Path>& all);

// Objects reachable from the world's initial set by following trigger
// edges, breadth first.
std::set<std::string> ReachableObjects(const TriggerGraph& graph);

// Fewest primitive actions after which every solution evidence triple is
// discovered, plus one for the warrant; -1 if unreachable within the cap.
int MinimalWinningSteps(const Engine& engine, size_t state_cap = 2000000);

}  // namespace mystery::oracle

#endif  // MYSTERY_TESTS_ORACLES_H_

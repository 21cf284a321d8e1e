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

#ifndef MYSTERY_SOLVER_H_
#define MYSTERY_SOLVER_H_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mystery/engine.h"

namespace mystery {

struct Playthrough {
  std::vector<Action> actions;
  Outcome outcome = Outcome::kInProgress;
  size_t step_count = 0;
};

// Plays the game to a win. Small games are searched breadth first for the
// shortest route to all evidence. Larger ones are played greedily: at each
// location the useful interactions (clue-bearing dialog, clue items, needed
// keys) are exhausted before moving to the nearest location that still has
// work, unlocking on the way. The warrant is built from discovered evidence,
// the culprit being the one suspect left uncleared. Throws kUnsolvable when
// progress stalls.
Playthrough AutoSolve(const GameDefinition& def);

// Warrant deduced from the evidence in `state`; throws kUnsolvable when
// the evidence does not single out one suspect.
Warrant DeduceWarrant(const GameDefinition& def, const GameState& state);

struct Metrics {
  int tree_size = 0;
  std::vector<int> path_length_per_suspect;
  int city_count = 0;
  int building_count = 0;
  double buildings_per_city = 0.0;
  int item_count = 0;
  int book_count = 0;
  int key_count = 0;
  int locked_building_count = 0;
  int npc_count = 0;
  int real_npc_count = 0;
  double real_npc_ratio = 0.0;
  int dialog_node_count = 0;
  double dialog_nodes_per_npc = 0.0;
  // Topic name -> number of NPCs with that side topic.
  std::map<std::string, int> side_branch_counts;
};

Metrics ComputeMetrics(const GameDefinition& def);

// Column names, exactly the Metrics field names.
const std::vector<std::string>& MetricColumns();

struct MetricsAggregate {
  std::map<std::string, double> mean;
  std::map<std::string, double> min;
  std::map<std::string, double> max;
  size_t games = 0;
};

// Scalar value of a column; the per-suspect path lengths contribute their
// mean and the side-branch column the total.
double MetricValue(const Metrics& m, const std::string& column);
MetricsAggregate AggregateMetrics(const std::vector<Metrics>& batch);

// One row per game (labelled by `names`) plus mean/min/max rows.
std::string MetricsCsv(const std::vector<std::string>& names,
                       const std::vector<Metrics>& batch);
nlohmann::ordered_json MetricsJson(const std::vector<std::string>& names,
                                   const std::vector<Metrics>& batch);

}  // namespace mystery

#endif  // MYSTERY_SOLVER_H_

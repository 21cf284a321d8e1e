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

#ifndef MYSTERY_PIPELINE_H_
#define MYSTERY_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "mystery/dialog.h"
#include "mystery/game_definition.h"
#include "mystery/knowledge.h"
#include "mystery/paths.h"
#include "mystery/suspects.h"
#include "mystery/worldgen.h"

namespace mystery {

struct GeneratorConfig {
  // Exactly one of these selects the knowledge source.
  std::optional<std::string> fixture;
  std::optional<std::string> endpoint;
  uint64_t seed = 1;
  GAConfig ga;
  PathSearchOptions paths;
  WorldgenOptions world;
  // Optional replacement for the bundled template corpus.
  std::optional<std::string> templates;
  std::optional<std::string> output;

  // Throws kInvalidArgument naming the offending field.
  void Validate() const;

  // Missing keys keep their defaults; unknown keys are rejected.
  static GeneratorConfig FromJson(const nlohmann::json& doc);
  static GeneratorConfig Load(const std::string& path);
  nlohmann::ordered_json ToJson() const;
};

KnowledgeStore OpenStore(const GeneratorConfig& config);

// Persons related to the victim that a path of at most `max_nodes` nodes
// can reach through links, iri-sorted.
std::vector<EntityRef> ReachableCandidates(const EntityRef& victim,
                                           KnowledgeStore& store,
                                           size_t limit, int max_nodes);

// Suspects, paths, world and dialog. Throws kVictimNotFound,
// kNoSolvablePuzzle, or kInvalidDefinition (with the report) when the result
// fails validation.
GameDefinition GenerateGame(const std::string& victim, KnowledgeStore& store,
                            const GeneratorConfig& config);

}  // namespace mystery

#endif  // MYSTERY_PIPELINE_H_

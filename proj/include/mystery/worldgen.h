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

#ifndef MYSTERY_WORLDGEN_H_
#define MYSTERY_WORLDGEN_H_

#include <string>
#include <vector>

#include "mystery/knowledge.h"
#include "mystery/paths.h"
#include "mystery/rng.h"
#include "mystery/world.h"

namespace mystery {

enum class NodeClass { kPlace, kPerson, kOther };

NodeClass ClassifyNode(const EntityRecord& record);

struct WorldgenOptions {
  double red_herring_rate = 0.15;
  // Per-depth chances used by the random placement policy.
  double key_chance = 0.5;
  double lock_chance = 0.5;

  void Validate() const;
};

// Creates cities, buildings, NPCs and items for every tree node, plus the
// victim's city and house. Throws kNoCityAvailable when a city is needed and
// the store has no place with coordinates.
World MaterializeWorld(const PlotTree& tree, KnowledgeStore& store, Rng& rng);

// Fills the victim's house with one associate per suspect branch and sets
// the initial object set.
void InjectVictimAssociates(World& world, KnowledgeStore& store, Rng& rng);

// Wires clues from each tree node to its children and returns the resulting
// graph. Throws kUnreachableObject if some object cannot be reached.
TriggerGraph BuildTriggerGraph(World& world, KnowledgeStore& store, Rng& rng);

// Adds ambient red-herring NPCs, one per selected building.
void InjectRedHerrings(World& world, double rate, KnowledgeStore& store,
                       Rng& rng);

// Decisions taken while walking the depth layers.
class PlacementPolicy {
 public:
  virtual ~PlacementPolicy() = default;
  virtual bool PopLock(int depth) = 0;
  virtual bool PlaceKey(int depth) = 0;
  virtual KeyType ChooseKey(int depth) = 0;
  // Index into `candidates`, which is never empty.
  virtual size_t ChooseBuilding(int depth,
                                const std::vector<std::string>& candidates) = 0;
};

class RandomPlacementPolicy : public PlacementPolicy {
 public:
  RandomPlacementPolicy(Rng& rng, double key_chance, double lock_chance)
      : rng_(rng), key_chance_(key_chance), lock_chance_(lock_chance) {}

  bool PopLock(int) override { return rng_.Chance(lock_chance_); }
  bool PlaceKey(int) override { return rng_.Chance(key_chance_); }
  KeyType ChooseKey(int) override { return rng_.Pick(AllKeyTypes()); }
  size_t ChooseBuilding(int,
                        const std::vector<std::string>& candidates) override {
    return rng_.Uniform(candidates.size());
  }

 private:
  Rng& rng_;
  double key_chance_;
  double lock_chance_;
};

// Walks buildings by trigger depth keeping a stack of pending locks. At each
// depth a pending lock may be popped onto a building of that depth, then a
// key may be placed there, pushing its lock. Keys therefore always precede
// their locks, and the starting building is never locked.
PuzzlePlacement PlaceLocksAndKeys(World& world, PlacementPolicy& policy);

// Whole-stage convenience: materialize, associates, triggers, red herrings,
// then puzzles.
struct GeneratedWorld {
  World world;
  TriggerGraph triggers;
  PuzzlePlacement puzzles;
};
GeneratedWorld GenerateWorld(const PlotTree& tree, KnowledgeStore& store,
                             Rng& rng, const WorldgenOptions& options);

}  // namespace mystery

#endif  // MYSTERY_WORLDGEN_H_

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

#ifndef MYSTERY_SUSPECTS_H_
#define MYSTERY_SUSPECTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mystery/knowledge.h"
#include "mystery/rng.h"

namespace mystery {

// n suspects and n-1 characteristics; the evolved genome.
struct Chromosome {
  std::vector<EntityRef> suspects;
  std::vector<std::string> characteristics;

  bool operator==(const Chromosome&) const = default;
};

struct EvidenceTriple {
  EntityRef suspect;
  std::string characteristic;
  std::string value;

  auto operator<=>(const EvidenceTriple&) const = default;
};

struct SuspectPuzzle {
  EntityRef victim;
  std::vector<EntityRef> suspects;
  EntityRef culprit;
  // One triple per innocent suspect, in suspect order.
  std::vector<EvidenceTriple> evidence;
  // suspect iri -> why the suspect is connected to the victim.
  std::map<std::string, std::string> direct_connections;
  // The evolved characteristic genes.
  std::vector<std::string> characteristics;
  // suspect iri -> every characteristic value known for the suspect; the
  // ground truth warrants are checked against.
  std::map<std::string, Characteristics> suspect_values;
};

enum class CascadeOrder { kSolvabilityFirst, kDiversityFirst };

struct GAConfig {
  int population_size = 100;
  int generations = 500;
  double mutation_chance = 0.20;
  int suspect_count = 5;
  uint64_t rng_seed = 0;
  // Cap on relatedPersons for tractability.
  size_t candidate_limit = 500;
  CascadeOrder order = CascadeOrder::kSolvabilityFirst;
  // Characteristic names never used as evidence.
  std::vector<std::string> excluded_characteristics;

  // Throws kInvalidArgument when a field is out of range.
  void Validate() const;
};

struct SolvabilityResult {
  // Number of characteristics paired with innocent suspects, 0..n-1.
  int depth = 0;
  // Present only when depth == n-1.
  std::optional<std::vector<EvidenceTriple>> pairing;
  std::optional<EntityRef> culprit;
};

struct CandidatePool {
  std::vector<EntityRef> suspects;
  std::vector<std::string> characteristics;
};

// Per-suspect value tables aligned with `suspects`. These table-level cores
// back the store-based entry points below.
SolvabilityResult SolvabilityOnTable(
    const std::vector<EntityRef>& suspects,
    const std::vector<Characteristics>& values,
    const std::vector<std::string>& characteristics);
double DiversityOnTable(const std::vector<Characteristics>& values,
                        const std::vector<std::string>& characteristics);

SolvabilityResult SolvabilityFitness(const Chromosome& chromosome,
                                     KnowledgeStore& store);
double DiversityFitness(const Chromosome& chromosome, KnowledgeStore& store);

// Per-gene replacement with unused pool members. Throws kPoolExhausted when
// a gene is selected and no distinct replacement exists.
Chromosome Mutate(const Chromosome& chromosome, const CandidatePool& pool,
                  double chance, Rng& rng);

struct EvolutionOutcome {
  Chromosome best;
  int best_depth = 0;
  double best_diversity = 0.0;
  // Set when best_depth reaches n-1.
  std::optional<SuspectPuzzle> puzzle;
};

// Runs the cascading-elitism search over an explicit candidate list without
// failing on an unsolvable outcome.
EvolutionOutcome RunEvolution(const EntityRef& victim,
                              const std::vector<EntityRef>& candidates,
                              KnowledgeStore& store, const GAConfig& config);

SuspectPuzzle Evolve(const EntityRef& victim, KnowledgeStore& store,
                     const GAConfig& config);
SuspectPuzzle Evolve(const EntityRef& victim,
                     const std::vector<EntityRef>& candidates,
                     KnowledgeStore& store, const GAConfig& config);

// Whether `value` acts as evidence of innocence for (characteristic) given
// the culprit's values.
bool IsEvidenceOfInnocence(const Characteristics& suspect_values,
                           const Characteristics& culprit_values,
                           const std::string& characteristic,
                           const std::string& value);

}  // namespace mystery

#endif  // MYSTERY_SUSPECTS_H_

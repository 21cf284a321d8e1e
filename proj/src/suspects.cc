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

#include "mystery/suspects.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "mystery/errors.h"

namespace mystery {

namespace {

const std::set<std::string> kEmpty;

const std::set<std::string>& ValuesOf(const Characteristics& values,
                                      const std::string& characteristic) {
  auto it = values.find(characteristic);
  return it == values.end() ? kEmpty : it->second;
}

bool HasValueOutside(const std::set<std::string>& mine,
                     const std::set<std::string>& killer) {
  for (const auto& v : mine) {
    if (!killer.count(v)) return true;
  }
  return false;
}

// Depth-first pairing for one candidate killer. Characteristics are visited
// in order; each may be paired with an unused innocent or left unpaired.
// `valid[c][s]` already encodes the three validity properties.
class PairingSearch {
 public:
  PairingSearch(const std::vector<std::vector<bool>>& valid, size_t innocents)
      : valid_(valid), innocents_(innocents),
        used_(innocents, false), current_(valid.size(), -1) {}

  int Run() {
    Visit(0, 0);
    return best_;
  }

  // Innocent index per characteristic (-1 = unpaired) for the best leaf.
  const std::vector<int>& best_assignment() const { return best_assignment_; }

 private:
  void Visit(size_t characteristic, int depth) {
    if (depth > best_) {
      best_ = depth;
      best_assignment_ = current_;
    }
    const int remaining = static_cast<int>(valid_.size() - characteristic);
    if (characteristic == valid_.size() || depth + remaining <= best_ ||
        best_ == static_cast<int>(std::min(valid_.size(), innocents_))) {
      return;
    }
    for (size_t s = 0; s < innocents_; ++s) {
      if (used_[s] || !valid_[characteristic][s]) continue;
      used_[s] = true;
      current_[characteristic] = static_cast<int>(s);
      Visit(characteristic + 1, depth + 1);
      current_[characteristic] = -1;
      used_[s] = false;
    }
    Visit(characteristic + 1, depth);  // backtrack: leave it unpaired
  }

  const std::vector<std::vector<bool>>& valid_;
  size_t innocents_;
  std::vector<bool> used_;
  std::vector<int> current_;
  int best_ = -1;
  std::vector<int> best_assignment_;
};

// Picks the evidence value: a value the culprit lacks, rarest among the
// chromosome's suspects, ties broken lexicographically.
std::string ChooseEvidenceValue(const std::vector<Characteristics>& values,
                                size_t suspect, size_t culprit,
                                const std::string& characteristic) {
  const auto& killer = ValuesOf(values[culprit], characteristic);
  std::string best;
  size_t best_count = 0;
  for (const auto& v : ValuesOf(values[suspect], characteristic)) {
    if (killer.count(v)) continue;
    size_t count = 0;
    for (const auto& row : values) count += ValuesOf(row, characteristic).count(v);
    if (best.empty() || count < best_count) {
      best = v;
      best_count = count;
    }
  }
  return best;
}

struct Scored {
  std::vector<int> suspects;
  std::vector<int> characteristics;
  int depth = 0;
  double diversity = 0.0;
};

class Evolution {
 public:
  Evolution(const EntityRef& victim, std::vector<EntityRef> candidates,
            KnowledgeStore& store, const GAConfig& config)
      : victim_(victim), store_(store), config_(config),
        rng_(config.rng_seed) {
    config_.Validate();
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::set<std::string> excluded(config.excluded_characteristics.begin(),
                                   config.excluded_characteristics.end());
    std::set<std::string> characteristic_names;
    for (const auto& candidate : candidates) {
      if (candidate.iri == victim.iri) continue;
      EntityRecord record = store.EntityFacts(candidate);
      pool_.suspects.push_back(record.ref);
      for (const auto& [name, unused] : record.characteristics) {
        if (!excluded.count(name)) characteristic_names.insert(name);
      }
      values_.push_back(std::move(record.characteristics));
    }
    pool_.characteristics.assign(characteristic_names.begin(),
                                 characteristic_names.end());
    const size_t n = static_cast<size_t>(config.suspect_count);
    if (pool_.suspects.size() < n || pool_.characteristics.size() < n - 1) {
      throw Error(ErrorCode::kInsufficientCandidates,
                  std::to_string(pool_.suspects.size()) + " candidates and " +
                      std::to_string(pool_.characteristics.size()) +
                      " characteristics for " + std::to_string(n) +
                      " suspects");
    }
  }

  EvolutionOutcome Run() {
    const size_t size = static_cast<size_t>(config_.population_size);
    std::vector<Scored> population;
    population.reserve(size);
    while (population.size() < size) population.push_back(Random());

    const size_t keep = std::max<size_t>(1, size / 2);
    const size_t parents = std::max<size_t>(1, size / 4);
    auto by_depth = [](const Scored& a, const Scored& b) {
      return a.depth > b.depth;
    };
    auto by_diversity = [](const Scored& a, const Scored& b) {
      return a.diversity > b.diversity;
    };
    for (int generation = 0; generation < config_.generations; ++generation) {
      if (config_.order == CascadeOrder::kSolvabilityFirst) {
        std::stable_sort(population.begin(), population.end(), by_depth);
        population.resize(keep);
        std::stable_sort(population.begin(), population.end(), by_diversity);
      } else {
        std::stable_sort(population.begin(), population.end(), by_diversity);
        population.resize(keep);
        std::stable_sort(population.begin(), population.end(), by_depth);
      }
      const size_t elite = std::min(parents, population.size());
      for (size_t i = 0; population.size() < size; ++i) {
        population.push_back(Child(population[i % elite]));
      }
    }
    std::stable_sort(population.begin(), population.end(),
                     [](const Scored& a, const Scored& b) {
                       if (a.depth != b.depth) return a.depth > b.depth;
                       return a.diversity > b.diversity;
                     });
    return Finish(population.front());
  }

 private:
  std::vector<int> Sample(size_t count, size_t from) {
    std::vector<int> all(from);
    std::iota(all.begin(), all.end(), 0);
    for (size_t i = 0; i < count; ++i) {
      std::swap(all[i], all[i + rng_.Uniform(from - i)]);
    }
    all.resize(count);
    return all;
  }

  Scored Random() {
    Scored s;
    s.suspects = Sample(config_.suspect_count, pool_.suspects.size());
    s.characteristics =
        Sample(config_.suspect_count - 1, pool_.characteristics.size());
    Score(s);
    return s;
  }

  Scored Child(const Scored& parent) {
    Scored child;
    const double p = config_.mutation_chance;
    const bool suspects_free = pool_.suspects.size() > parent.suspects.size();
    const bool chars_free =
        pool_.characteristics.size() > parent.characteristics.size();
    child.suspects = MutateGenes(parent.suspects, pool_.suspects.size(),
                                 suspects_free ? p : 0.0);
    child.characteristics =
        MutateGenes(parent.characteristics, pool_.characteristics.size(),
                    chars_free ? p : 0.0);
    Score(child);
    return child;
  }

  std::vector<int> MutateGenes(const std::vector<int>& genes, size_t pool_size,
                               double chance) {
    std::vector<int> out = genes;
    for (size_t g = 0; g < out.size(); ++g) {
      if (!rng_.Chance(chance)) continue;
      std::vector<int> unused;
      for (size_t i = 0; i < pool_size; ++i) {
        if (std::find(out.begin(), out.end(), static_cast<int>(i)) ==
            out.end()) {
          unused.push_back(static_cast<int>(i));
        }
      }
      if (unused.empty()) {
        throw Error(ErrorCode::kPoolExhausted,
                    "no distinct replacement for gene " + std::to_string(g));
      }
      out[g] = rng_.Pick(unused);
    }
    return out;
  }

 private:
  void Score(Scored& s) {
    std::vector<int> ks = s.suspects;
    std::vector<int> kc = s.characteristics;
    std::sort(ks.begin(), ks.end());
    std::sort(kc.begin(), kc.end());
    auto key = std::make_pair(std::move(ks), std::move(kc));
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      s.depth = it->second.first;
      s.diversity = it->second.second;
      return;
    }
    std::vector<Characteristics> rows;
    std::vector<EntityRef> refs;
    std::vector<std::string> names;
    Table(s, refs, rows, names);
    s.depth = SolvabilityOnTable(refs, rows, names).depth;
    s.diversity = DiversityOnTable(rows, names);
    memo_.emplace(std::move(key), std::make_pair(s.depth, s.diversity));
  }

  void Table(const Scored& s, std::vector<EntityRef>& refs,
             std::vector<Characteristics>& rows,
             std::vector<std::string>& names) const {
    for (int i : s.suspects) {
      refs.push_back(pool_.suspects[i]);
      rows.push_back(values_[i]);
    }
    for (int c : s.characteristics) names.push_back(pool_.characteristics[c]);
  }

  EvolutionOutcome Finish(const Scored& best) {
    EvolutionOutcome outcome;
    std::vector<Characteristics> rows;
    std::vector<EntityRef> refs;
    std::vector<std::string> names;
    Table(best, refs, rows, names);
    outcome.best = Chromosome{refs, names};
    outcome.best_depth = best.depth;
    outcome.best_diversity = best.diversity;
    SolvabilityResult solved = SolvabilityOnTable(refs, rows, names);
    if (solved.depth == config_.suspect_count - 1 && solved.culprit) {
      SuspectPuzzle puzzle;
      puzzle.victim = victim_;
      puzzle.suspects = refs;
      puzzle.culprit = *solved.culprit;
      puzzle.evidence = *solved.pairing;
      puzzle.direct_connections = DirectConnections(refs);
      puzzle.characteristics = names;
      for (size_t k = 0; k < refs.size(); ++k) {
        puzzle.suspect_values[refs[k].iri] = rows[k];
      }
      outcome.puzzle = std::move(puzzle);
    }
    return outcome;
  }

  std::map<std::string, std::string> DirectConnections(
      const std::vector<EntityRef>& suspects) {
    std::map<std::string, std::string> out;
    const EntityRecord victim = store_.EntityFacts(victim_);
    const auto links = store_.Links(victim_);
    for (const auto& suspect : suspects) {
      std::vector<std::string> reasons;
      for (const auto& link : links) {
        if (link.from.iri == suspect.iri || link.to.iri == suspect.iri) {
          reasons.push_back("link " + link.predicate);
        }
      }
      const EntityRecord record = store_.EntityFacts(suspect);
      for (const auto& [name, values] : record.characteristics) {
        const auto* theirs = victim.Values(name);
        if (theirs == nullptr) continue;
        for (const auto& v : values) {
          if (theirs->count(v)) reasons.push_back(name + " " + v);
        }
      }
      if (reasons.size() > 3) reasons.resize(3);
      std::string joined;
      for (const auto& r : reasons) {
        if (!joined.empty()) joined += "; ";
        joined += r;
      }
      out[suspect.iri] = joined.empty() ? "related" : joined;
    }
    return out;
  }

  EntityRef victim_;
  KnowledgeStore& store_;
  GAConfig config_;
  Rng rng_;
  CandidatePool pool_;
  std::vector<Characteristics> values_;
  std::map<std::pair<std::vector<int>, std::vector<int>>,
           std::pair<int, double>>
      memo_;
};

}  // namespace

void GAConfig::Validate() const {
  if (population_size < 4) {
    throw Error(ErrorCode::kInvalidArgument, "population_size must be >= 4");
  }
  if (generations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "generations must be >= 1");
  }
  if (!(mutation_chance >= 0.0 && mutation_chance <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "mutation_chance must lie in [0, 1]");
  }
  if (suspect_count < 2) {
    throw Error(ErrorCode::kInvalidArgument, "suspect_count must be >= 2");
  }
  if (candidate_limit < static_cast<size_t>(suspect_count)) {
    throw Error(ErrorCode::kInvalidArgument,
                "candidate_limit must be >= suspect_count");
  }
}

bool IsEvidenceOfInnocence(const Characteristics& suspect_values,
                           const Characteristics& culprit_values,
                           const std::string& characteristic,
                           const std::string& value) {
  return ValuesOf(suspect_values, characteristic).count(value) > 0 &&
         ValuesOf(culprit_values, characteristic).count(value) == 0;
}

SolvabilityResult SolvabilityOnTable(
    const std::vector<EntityRef>& suspects,
    const std::vector<Characteristics>& values,
    const std::vector<std::string>& characteristics) {
  if (suspects.size() != values.size()) {
    throw Error(ErrorCode::kInvalidArgument, "suspects/values size mismatch");
  }
  const size_t n = suspects.size();
  SolvabilityResult result;
  int best_killer = -1;
  std::vector<int> best_assignment;
  std::vector<size_t> best_innocents;
  for (size_t killer = 0; killer < n; ++killer) {
    std::vector<size_t> innocents;
    for (size_t s = 0; s < n; ++s) {
      if (s != killer) innocents.push_back(s);
    }
    std::vector<std::vector<bool>> valid(characteristics.size(),
                                         std::vector<bool>(innocents.size()));
    for (size_t c = 0; c < characteristics.size(); ++c) {
      const auto& killer_values = ValuesOf(values[killer], characteristics[c]);
      if (killer_values.empty()) continue;  // (a) killer holds a value
      for (size_t i = 0; i < innocents.size(); ++i) {
        // (b) and (c): the innocent holds a value the killer does not.
        valid[c][i] = HasValueOutside(
            ValuesOf(values[innocents[i]], characteristics[c]), killer_values);
      }
    }
    PairingSearch search(valid, innocents.size());
    const int depth = std::max(0, search.Run());
    if (best_killer < 0 || depth > result.depth) {
      result.depth = depth;
      best_killer = static_cast<int>(killer);
      best_assignment = search.best_assignment();
      best_innocents = innocents;
    }
    if (n > 0 && result.depth == static_cast<int>(n - 1)) break;
  }

  if (n >= 2 && result.depth == static_cast<int>(n - 1) &&
      characteristics.size() == n - 1) {
    std::vector<EvidenceTriple> pairing;
    for (size_t c = 0; c < characteristics.size(); ++c) {
      const size_t suspect = best_innocents[best_assignment[c]];
      pairing.push_back(EvidenceTriple{
          suspects[suspect], characteristics[c],
          ChooseEvidenceValue(values, suspect, best_killer,
                              characteristics[c])});
    }
    std::sort(pairing.begin(), pairing.end(),
              [&](const EvidenceTriple& a, const EvidenceTriple& b) {
                auto index = [&](const EntityRef& r) {
                  return std::find(suspects.begin(), suspects.end(), r) -
                         suspects.begin();
                };
                return index(a.suspect) < index(b.suspect);
              });
    result.pairing = std::move(pairing);
    result.culprit = suspects[best_killer];
  }
  return result;
}

double DiversityOnTable(const std::vector<Characteristics>& values,
                        const std::vector<std::string>& characteristics) {
  double total = 0.0;
  for (const auto& characteristic : characteristics) {
    size_t holders = 0;
    std::map<std::string, size_t> counts;
    for (const auto& row : values) {
      const auto& held = ValuesOf(row, characteristic);
      if (held.empty()) continue;
      ++holders;
      for (const auto& v : held) ++counts[v];
    }
    if (holders == 0) continue;
    double entropy = 0.0;
    for (const auto& [value, count] : counts) {
      const double p = static_cast<double>(count) / holders;
      entropy -= p * std::log2(p);
    }
    total += static_cast<double>(holders) * entropy;
  }
  return total;
}

namespace {

void LoadTable(const Chromosome& chromosome, KnowledgeStore& store,
               std::vector<Characteristics>& rows) {
  for (const auto& suspect : chromosome.suspects) {
    rows.push_back(store.EntityFacts(suspect).characteristics);
  }
}

}  // namespace

SolvabilityResult SolvabilityFitness(const Chromosome& chromosome,
                                     KnowledgeStore& store) {
  std::vector<Characteristics> rows;
  LoadTable(chromosome, store, rows);
  return SolvabilityOnTable(chromosome.suspects, rows,
                            chromosome.characteristics);
}

double DiversityFitness(const Chromosome& chromosome, KnowledgeStore& store) {
  std::vector<Characteristics> rows;
  LoadTable(chromosome, store, rows);
  return DiversityOnTable(rows, chromosome.characteristics);
}

Chromosome Mutate(const Chromosome& chromosome, const CandidatePool& pool,
                  double chance, Rng& rng) {
  Chromosome out = chromosome;
  auto mutate = [&](auto& genes, const auto& candidates) {
    for (size_t g = 0; g < genes.size(); ++g) {
      if (!rng.Chance(chance)) continue;
      std::vector<size_t> unused;
      for (size_t i = 0; i < candidates.size(); ++i) {
        if (std::find(genes.begin(), genes.end(), candidates[i]) ==
            genes.end()) {
          unused.push_back(i);
        }
      }
      if (unused.empty()) {
        throw Error(ErrorCode::kPoolExhausted,
                    "no distinct replacement for gene " + std::to_string(g));
      }
      genes[g] = candidates[rng.Pick(unused)];
    }
  };
  mutate(out.suspects, pool.suspects);
  mutate(out.characteristics, pool.characteristics);
  return out;
}

EvolutionOutcome RunEvolution(const EntityRef& victim,
                              const std::vector<EntityRef>& candidates,
                              KnowledgeStore& store, const GAConfig& config) {
  Evolution evolution(victim, candidates, store, config);
  return evolution.Run();
}

SuspectPuzzle Evolve(const EntityRef& victim,
                     const std::vector<EntityRef>& candidates,
                     KnowledgeStore& store, const GAConfig& config) {
  EvolutionOutcome outcome = RunEvolution(victim, candidates, store, config);
  if (!outcome.puzzle) {
    throw Error(ErrorCode::kNoSolvablePuzzle,
                "best depth " + std::to_string(outcome.best_depth) + " of " +
                    std::to_string(config.suspect_count - 1));
  }
  return *outcome.puzzle;
}

SuspectPuzzle Evolve(const EntityRef& victim, KnowledgeStore& store,
                     const GAConfig& config) {
  config.Validate();
  return Evolve(victim, store.RelatedPersons(victim, config.candidate_limit),
                store, config);
}

}  // namespace mystery

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

#ifndef MYSTERY_VALIDATOR_H_
#define MYSTERY_VALIDATOR_H_

#include <string>
#include <vector>

#include "mystery/game_definition.h"

namespace mystery {

struct Violation {
  // Stable check identifier, e.g. "key-depth < lock-depth".
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(const std::string& check) const;
  std::string ToString() const;
};

// Referential integrity, trigger acyclicity and reachability, puzzle and
// suspect-puzzle invariants, and dialog structure. Never throws.
ValidationReport ValidateDefinition(const GameDefinition& def);

// Kahn-style cycle check over the trigger edges.
bool TriggerGraphIsAcyclic(const TriggerGraph& graph);

}  // namespace mystery

#endif  // MYSTERY_VALIDATOR_H_

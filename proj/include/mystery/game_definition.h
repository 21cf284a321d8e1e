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

#ifndef MYSTERY_GAME_DEFINITION_H_
#define MYSTERY_GAME_DEFINITION_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mystery/suspects.h"
#include "mystery/world.h"

namespace mystery {

inline constexpr int kDefinitionVersion = 1;
inline constexpr char kGeneratorVersion[] = "mystery-1.0.0";

struct DefinitionMetadata {
  std::string victim;
  std::string victim_iri;
  uint64_t seed = 0;
  std::string generator_version = kGeneratorVersion;
  std::string source;
  int random_cities = 0;

  bool operator==(const DefinitionMetadata&) const = default;
};

struct GameDefinition {
  int version = kDefinitionVersion;
  DefinitionMetadata metadata;
  World world;
  TriggerGraph triggers;
  PuzzlePlacement puzzles;
  SuspectPuzzle solution;
};

nlohmann::ordered_json DefinitionToJson(const GameDefinition& def);
// Expects a document that already passed schema validation.
GameDefinition DefinitionFromJson(const nlohmann::json& doc);

// Canonical text form: two-space indented JSON plus a trailing newline.
std::string SerializeDefinition(const GameDefinition& def);
// Parses and schema-validates. Throws kParseError for malformed JSON (with
// the line number), kSchemaVersionMismatch for an unknown version, and
// kInvalidDefinition listing schema violations by JSON path.
GameDefinition ParseDefinition(std::string_view text);
GameDefinition LoadDefinition(const std::string& path);
void SaveDefinition(const GameDefinition& def, const std::string& path);

// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string DefinitionHash(const GameDefinition& def);
uint64_t Fnv1a64(std::string_view data);

// The bundled schema document.
const nlohmann::json& DefinitionSchema();

// Checks `doc` against a JSON Schema subset: type, required, properties,
// additionalProperties (boolean), items, enum, minimum, minItems and local
// "$ref" into "$defs". Returns one message per violation, prefixed by path.
std::vector<std::string> ValidateSchema(const nlohmann::json& doc,
                                        const nlohmann::json& schema);

// Shared helpers for other JSON boundaries.
nlohmann::ordered_json EntityRefToJson(const EntityRef& ref);
EntityRef EntityRefFromJson(const nlohmann::json& doc);
nlohmann::ordered_json EvidenceToJson(const EvidenceTriple& triple);
EvidenceTriple EvidenceFromJson(const nlohmann::json& doc);
std::string ReadTextFile(const std::string& path);

}  // namespace mystery

#endif  // MYSTERY_GAME_DEFINITION_H_

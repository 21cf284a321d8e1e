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

#ifndef MYSTERY_LIVE_SOURCE_H_
#define MYSTERY_LIVE_SOURCE_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mystery/knowledge.h"

namespace mystery {

struct LiveConfig {
  // e.g. "http://dbpedia.org/sparql"
  std::string endpoint;
  int timeout_seconds = 30;
  // Predicates whose shared objects make two people "related". Empty means
  // the built-in default list.
  std::vector<std::string> predicate_allowlist;
  std::string language = "en";
};

// Reads MYSTERY_SPARQL_ENDPOINT and MYSTERY_SPARQL_TIMEOUT.
LiveConfig LiveConfigFromEnvironment();

std::unique_ptr<KnowledgeSource> MakeLiveSource(const LiveConfig& config);

// One row per solution; variable name -> lexical value.
using SparqlRow = std::map<std::string, std::string>;

// Parses the standard SPARQL 1.1 JSON results format.
std::vector<SparqlRow> ParseSparqlResults(std::string_view body);

}  // namespace mystery

#endif  // MYSTERY_LIVE_SOURCE_H_

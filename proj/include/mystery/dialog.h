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

#ifndef MYSTERY_DIALOG_H_
#define MYSTERY_DIALOG_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mystery/knowledge.h"
#include "mystery/rng.h"
#include "mystery/suspects.h"
#include "mystery/world.h"

namespace mystery {

// Placeholder tokens understood by templates.
inline constexpr std::string_view kPlaceholders[] = {"PERSON", "PLACE", "ITEM",
                                                     "DATE", "VALUE"};

struct Template {
  std::string id;
  std::string slot;
  std::string pattern;
};

// Sentence templates grouped by slot, plus the sensitive-term denylist.
class TemplateCorpus {
 public:
  // The corpus compiled into the binary.
  static const TemplateCorpus& Default();
  static TemplateCorpus Parse(std::string_view json_text);
  static TemplateCorpus Load(const std::string& path);

  int version() const { return version_; }
  // Throws kInvalidArgument for an unknown or empty slot.
  const std::vector<Template>& Slot(const std::string& slot) const;
  const std::map<std::string, std::vector<Template>>& slots() const {
    return slots_;
  }
  // Case-insensitive whole-word match of any denylisted term.
  bool IsSensitive(std::string_view text) const;
  void set_sensitive(std::vector<std::string> terms);

 private:
  int version_ = 1;
  std::map<std::string, std::vector<Template>> slots_;
  std::vector<std::string> sensitive_;
};

// Placeholder tokens present in `pattern`, in order of appearance.
std::vector<std::string> PlaceholdersIn(std::string_view pattern);

bool HasResidualPlaceholder(std::string_view text);

// Single-pass substitution; bound values are never re-expanded. Throws
// kMissingBinding naming the first unbound placeholder.
std::string InstantiateTemplate(const Template& tmpl,
                                const std::map<std::string, std::string>& bindings);

struct DialogContext {
  // Label of whoever this character is connected to, e.g. the victim.
  std::string previous_label;
  // Evidence of innocence this character can give.
  std::optional<EvidenceTriple> evidence;
};

inline constexpr char kGreeting[] = "Hello";

// Creates the tree with its greeting root.
DialogTree NewDialogTree(const Npc& npc);

// Appends the main branch under the root and returns its node ids.
std::vector<std::string> BuildMainBranch(DialogTree& tree, const World& world,
                                         const Npc& npc,
                                         const DialogContext& context,
                                         const TemplateCorpus& corpus,
                                         Rng& rng);

// Appends up to two personal-data side branches; returns the chosen topics.
std::vector<DialogTopic> BuildSideBranches(DialogTree& tree,
                                           const EntityRecord& record,
                                           const TemplateCorpus& corpus,
                                           Rng& rng);

// Topics for which the record carries data.
std::vector<DialogTopic> EligibleTopics(const EntityRecord& record);

// Builds every NPC's tree and distributes the evidence triples among the
// suspects, each triple told by a suspect other than the one it clears.
void GenerateDialogs(World& world, const SuspectPuzzle& puzzle,
                     KnowledgeStore& store, const TemplateCorpus& corpus,
                     Rng& rng);

// Human-readable characteristic name, e.g. "deathYear" -> "death year".
std::string HumanizeCharacteristic(const std::string& name);

}  // namespace mystery

#endif  // MYSTERY_DIALOG_H_

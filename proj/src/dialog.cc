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

#include "mystery/dialog.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "embedded.h"
#include "json.hpp"
#include "mystery/errors.h"

namespace mystery {
namespace {

using json = nlohmann::json;

bool IsTokenChar(char c) {
  return std::isupper(static_cast<unsigned char>(c)) || c == '_';
}

// Calls `fn(position, token)` for each placeholder token found as a whole
// word in `text`.
template <typename Fn>
void ScanPlaceholders(std::string_view text, Fn fn) {
  size_t i = 0;
  while (i < text.size()) {
    if (!IsTokenChar(text[i]) || (i > 0 && IsTokenChar(text[i - 1]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && IsTokenChar(text[j])) ++j;
    std::string_view word = text.substr(i, j - i);
    for (std::string_view token : kPlaceholders) {
      if (word == token) {
        fn(i, std::string(token));
        break;
      }
    }
    i = j;
  }
}

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Display form of a characteristic value; iri-like values keep their last
// path segment.
std::string DisplayValue(const std::string& value) {
  if (value.rfind("http", 0) != 0) return value;
  std::string tail = value.substr(value.find_last_of('/') + 1);
  std::replace(tail.begin(), tail.end(), '_', ' ');
  return tail;
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += i + 1 == names.size() ? " and " : ", ";
    out += names[i];
  }
  return out;
}

class TreeWriter {
 public:
  TreeWriter(DialogTree& tree, const TemplateCorpus& corpus, Rng& rng)
      : tree_(tree), corpus_(corpus), rng_(rng) {}

  std::string Add(const std::string& parent, Speaker speaker,
                  std::string text, DialogTopic topic) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "/d%02zu", tree_.nodes.size() + 1);
    DialogNode node;
    node.id = tree_.id + buf;
    node.speaker = speaker;
    node.text = std::move(text);
    node.topic = topic;
    std::string id = node.id;
    tree_.nodes.emplace(id, std::move(node));
    if (!parent.empty()) tree_.nodes.at(parent).children.push_back(id);
    return id;
  }

  std::string Say(const std::string& parent, Speaker speaker,
                  const std::string& slot,
                  const std::map<std::string, std::string>& bindings,
                  DialogTopic topic) {
    const Template& tmpl = rng_.Pick(corpus_.Slot(slot));
    return Add(parent, speaker, InstantiateTemplate(tmpl, bindings), topic);
  }

  DialogNode& node(const std::string& id) { return tree_.nodes.at(id); }

 private:
  DialogTree& tree_;
  const TemplateCorpus& corpus_;
  Rng& rng_;
};

const char* ItemNoun(ItemKind kind) {
  switch (kind) {
    case ItemKind::kBook:
      return "book";
    case ItemKind::kList:
      return "list";
    case ItemKind::kLetter:
      return "letter";
    case ItemKind::kPhotograph:
      return "photograph";
    case ItemKind::kKey:
      return "tool";
  }
  return "thing";
}

std::string PlaceOf(const World& world, const std::string& id) {
  std::string building = world.BuildingOf(id);
  std::string city = world.CityOf(id);
  if (building.empty() || building == id) return world.Label(city);
  return "the " + world.Label(building) + " in " + world.Label(city);
}

}  // namespace

const TemplateCorpus& TemplateCorpus::Default() {
  static const TemplateCorpus kCorpus = Parse(kEmbeddedTemplates);
  return kCorpus;
}

TemplateCorpus TemplateCorpus::Parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                std::string("template corpus: ") + e.what());
  }
  TemplateCorpus corpus;
  if (!doc.is_object() || !doc.contains("slots") ||
      !doc["slots"].is_object()) {
    throw Error(ErrorCode::kParseError, "template corpus: missing slots");
  }
  corpus.version_ = doc.value("version", 1);
  if (corpus.version_ != 1) {
    throw Error(ErrorCode::kSchemaVersionMismatch,
                "template corpus version " + std::to_string(corpus.version_));
  }
  for (const auto& [slot, variants] : doc["slots"].items()) {
    if (!variants.is_array() || variants.empty()) {
      throw Error(ErrorCode::kParseError,
                  "template corpus: slot '" + slot + "' has no variants");
    }
    auto& list = corpus.slots_[slot];
    for (size_t i = 0; i < variants.size(); ++i) {
      if (!variants[i].is_string()) {
        throw Error(ErrorCode::kParseError,
                    "template corpus: " + slot + "[" + std::to_string(i) +
                        "] is not a string");
      }
      list.push_back(Template{slot + "." + std::to_string(i), slot,
                              variants[i].get<std::string>()});
    }
  }
  if (doc.contains("sensitive")) {
    corpus.set_sensitive(doc["sensitive"].get<std::vector<std::string>>());
  }
  return corpus;
}

TemplateCorpus TemplateCorpus::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open template corpus " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const std::vector<Template>& TemplateCorpus::Slot(
    const std::string& slot) const {
  auto it = slots_.find(slot);
  if (it == slots_.end() || it->second.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "template corpus has no slot '" + slot + "'");
  }
  return it->second;
}

void TemplateCorpus::set_sensitive(std::vector<std::string> terms) {
  sensitive_.clear();
  for (const std::string& term : terms) sensitive_.push_back(Lower(term));
}

bool TemplateCorpus::IsSensitive(std::string_view text) const {
  std::string haystack = Lower(text);
  for (const std::string& term : sensitive_) {
    size_t pos = 0;
    while ((pos = haystack.find(term, pos)) != std::string::npos) {
      size_t end = pos + term.size();
      bool left = pos == 0 || !std::isalnum(static_cast<unsigned char>(
                                  haystack[pos - 1]));
      bool right = end == haystack.size() ||
                   !std::isalnum(static_cast<unsigned char>(haystack[end]));
      if (left && right) return true;
      pos = end;
    }
  }
  return false;
}

std::vector<std::string> PlaceholdersIn(std::string_view pattern) {
  std::vector<std::string> out;
  ScanPlaceholders(pattern,
                   [&](size_t, const std::string& token) { out.push_back(token); });
  return out;
}

bool HasResidualPlaceholder(std::string_view text) {
  bool found = false;
  ScanPlaceholders(text, [&](size_t, const std::string&) { found = true; });
  return found;
}

std::string InstantiateTemplate(
    const Template& tmpl, const std::map<std::string, std::string>& bindings) {
  std::string out;
  size_t last = 0;
  std::string_view pattern = tmpl.pattern;
  ScanPlaceholders(pattern, [&](size_t pos, const std::string& token) {
    auto it = bindings.find(token);
    if (it == bindings.end()) {
      throw Error(ErrorCode::kMissingBinding, token);
    }
    out.append(pattern.substr(last, pos - last));
    out += it->second;
    last = pos + token.size();
  });
  out.append(pattern.substr(last));
  return out;
}

std::string HumanizeCharacteristic(const std::string& name) {
  std::string words;
  for (char c : name) {
    if (std::isupper(static_cast<unsigned char>(c)) && !words.empty() &&
        words.back() != ' ') {
      words += ' ';
    }
    words += c == '_' ? ' '
                      : static_cast<char>(
                            std::tolower(static_cast<unsigned char>(c)));
  }
  return words;
}

DialogTree NewDialogTree(const Npc& npc) {
  DialogTree tree;
  tree.id = npc.dialog_tree_id;
  tree.npc_id = npc.id;
  DialogNode root;
  root.id = tree.id + "/d01";
  root.speaker = Speaker::kPlayer;
  root.text = kGreeting;
  root.hidden = false;
  root.topic = DialogTopic::kGreeting;
  tree.root_id = root.id;
  tree.nodes.emplace(root.id, std::move(root));
  return tree;
}

std::vector<std::string> BuildMainBranch(DialogTree& tree, const World& world,
                                         const Npc& npc,
                                         const DialogContext& context,
                                         const TemplateCorpus& corpus,
                                         Rng& rng) {
  TreeWriter w(tree, corpus, rng);
  std::vector<std::string> branch;
  const auto kMain = DialogTopic::kMain;
  auto step = [&](const std::string& parent, Speaker speaker,
                  const std::string& slot,
                  const std::map<std::string, std::string>& bindings) {
    branch.push_back(w.Say(parent, speaker, slot, bindings, kMain));
    return branch.back();
  };
  const std::map<std::string, std::string> self = {
      {"PERSON", npc.name},
      {"VALUE", npc.relation.empty() ? "acquaintance" : npc.relation}};

  std::string at = step(tree.root_id, Speaker::kPlayer, "ask_help", {});
  if (npc.is_red_herring) {
    at = step(at, Speaker::kNpc, "herring_help", {});
    at = step(at, Speaker::kPlayer, "ask_name", {});
    at = step(at, Speaker::kNpc, "herring_name", self);
    at = step(at, Speaker::kPlayer, "ask_knowledge", {});
    step(at, Speaker::kNpc, "herring_knowledge", {});
    tree.main_branch = branch;
    return branch;
  }
  bool suspect = npc.role == NpcRole::kSuspect;
  at = step(at, Speaker::kNpc, suspect ? "plea" : "help_reply", {});
  at = step(at, Speaker::kPlayer, "ask_name", {});
  at = step(at, Speaker::kNpc, "name_reply", self);

  if (!npc.clue_targets.empty()) {
    std::vector<std::string> names;
    bool sensitive = false;
    for (const std::string& target : npc.clue_targets) {
      names.push_back(world.Label(target));
      sensitive = sensitive || corpus.IsSensitive(names.back());
    }
    at = step(at, Speaker::kPlayer, "ask_knowledge", {});
    std::string about = sensitive ? "a few things" : JoinNames(names);
    std::string knowledge = step(
        at, Speaker::kNpc, "knowledge_reply",
        {{"PERSON", context.previous_label}, {"VALUE", about}});
    for (const std::string& target : npc.clue_targets) {
      std::string label = world.Label(target);
      std::string ask;
      std::string answer;
      ObjectKind kind = world.KindOf(target);
      if (corpus.IsSensitive(label)) {
        ask = step(knowledge, Speaker::kPlayer, "ask_neutral", {});
      } else if (kind == ObjectKind::kNpc) {
        ask = step(knowledge, Speaker::kPlayer, "ask_where_person",
                   {{"PERSON", label}});
      } else if (kind == ObjectKind::kItem) {
        ask = step(knowledge, Speaker::kPlayer, "ask_about_item",
                   {{"ITEM", label}});
      } else {
        ask = step(knowledge, Speaker::kPlayer, "ask_where_place",
                   {{"PLACE", label}});
      }
      if (kind == ObjectKind::kNpc) {
        answer = step(ask, Speaker::kNpc, "where_person",
                      {{"PERSON", label}, {"PLACE", PlaceOf(world, target)}});
      } else if (kind == ObjectKind::kItem) {
        const Item& item = world.items.at(target);
        std::string what = ItemNoun(item.kind);
        if (!corpus.IsSensitive(label)) what += " about " + label;
        answer = step(ask, Speaker::kNpc, "where_item",
                      {{"ITEM", what}, {"PLACE", PlaceOf(world, target)}});
      } else {
        std::string place = kind == ObjectKind::kBuilding
                                ? PlaceOf(world, target)
                                : label;
        answer = step(ask, Speaker::kNpc, "where_place", {{"PLACE", place}});
      }
      w.node(answer).reveal_effects.push_back(target);
    }
  }

  if (context.evidence) {
    const EvidenceTriple& e = *context.evidence;
    std::string fact = "Their " + HumanizeCharacteristic(e.characteristic) +
                       " is " + DisplayValue(e.value);
    at = step(at, Speaker::kPlayer, "ask_evidence",
              {{"PERSON", e.suspect.label}});
    std::string line = step(at, Speaker::kNpc, "evidence",
                            {{"PERSON", e.suspect.label}, {"VALUE", fact}});
    w.node(line).evidence = e;
  }
  tree.main_branch = branch;
  return branch;
}

std::vector<DialogTopic> EligibleTopics(const EntityRecord& record) {
  std::vector<DialogTopic> out;
  auto has = [&](const char* name) {
    const auto* values = record.Values(name);
    return values && !values->empty();
  };
  if (has("birthDate") && has("birthPlace")) out.push_back(DialogTopic::kBirth);
  if (has("residence")) out.push_back(DialogTopic::kResidence);
  if (has("knownFor") || has("award")) {
    out.push_back(DialogTopic::kAchievement);
  }
  return out;
}

std::vector<DialogTopic> BuildSideBranches(DialogTree& tree,
                                           const EntityRecord& record,
                                           const TemplateCorpus& corpus,
                                           Rng& rng) {
  std::vector<DialogTopic> eligible = EligibleTopics(record);
  size_t count = rng.Uniform(std::min<size_t>(2, eligible.size()) + 1);
  for (size_t i = 0; i < count; ++i) {
    std::swap(eligible[i], eligible[i + rng.Uniform(eligible.size() - i)]);
  }
  std::vector<DialogTopic> chosen(eligible.begin(), eligible.begin() + count);
  std::sort(chosen.begin(), chosen.end());

  TreeWriter w(tree, corpus, rng);
  auto first = [&](const char* name) {
    return DisplayValue(*record.Values(name)->begin());
  };
  auto pair = [&](DialogTopic topic, const char* ask, const char* say,
                  const std::map<std::string, std::string>& bindings) {
    std::string q = w.Say(tree.root_id, Speaker::kPlayer, ask, {}, topic);
    std::string a = w.Say(q, Speaker::kNpc, say, bindings, topic);
    tree.side_branches[topic].push_back(a);
  };
  for (DialogTopic topic : chosen) {
    switch (topic) {
      case DialogTopic::kBirth:
        pair(topic, "ask_birth_date", "birth_date",
             {{"DATE", first("birthDate")}});
        pair(topic, "ask_birth_place", "birth_place",
             {{"PLACE", first("birthPlace")}});
        break;
      case DialogTopic::kResidence:
        pair(topic, "ask_residence", "residence",
             {{"PLACE", first("residence")}});
        break;
      case DialogTopic::kAchievement: {
        const auto* known = record.Values("knownFor");
        std::string value = known && !known->empty() ? first("knownFor")
                                                     : first("award");
        pair(topic, "ask_achievement", "achievement", {{"VALUE", value}});
        break;
      }
      default:
        break;
    }
  }
  return chosen;
}

void GenerateDialogs(World& world, const SuspectPuzzle& puzzle,
                     KnowledgeStore& store, const TemplateCorpus& corpus,
                     Rng& rng) {
  std::map<std::string, std::string> suspect_npcs;
  for (const auto& [id, npc] : world.npcs) {
    if (npc.role == NpcRole::kSuspect && npc.source) {
      suspect_npcs.emplace(npc.source->iri, id);
    }
  }
  std::map<std::string, EvidenceTriple> evidence_for;
  const size_t n = puzzle.suspects.size();
  for (const EvidenceTriple& triple : puzzle.evidence) {
    auto pos = std::find(puzzle.suspects.begin(), puzzle.suspects.end(),
                         triple.suspect);
    if (pos == puzzle.suspects.end() || n < 2) continue;
    size_t index = static_cast<size_t>(pos - puzzle.suspects.begin());
    const EntityRef& teller = puzzle.suspects[(index + 1) % n];
    auto npc = suspect_npcs.find(teller.iri);
    if (npc != suspect_npcs.end()) evidence_for.emplace(npc->second, triple);
  }

  std::map<std::string, std::string> location_of_carrier;
  for (const auto& [id, city] : world.cities) {
    for (const std::string& c : city.activates) location_of_carrier[c] = id;
  }
  for (const auto& [id, building] : world.buildings) {
    for (const std::string& c : building.activates) {
      location_of_carrier[c] = id;
    }
  }

  const PlotTree& plot = world.plot;
  for (auto& [id, npc] : world.npcs) {
    Rng local = rng.Fork(id);
    DialogContext context;
    if (npc.tree_node > 0) {
      context.previous_label =
          plot.nodes.at(plot.nodes.at(npc.tree_node).parent).entity.label;
    } else if (auto loc = location_of_carrier.find(id);
               npc.role == NpcRole::kCarrier &&
               loc != location_of_carrier.end()) {
      context.previous_label = world.Label(loc->second);
    } else {
      context.previous_label = plot.root().entity.label;
    }
    if (auto e = evidence_for.find(id); e != evidence_for.end()) {
      context.evidence = e->second;
    }
    DialogTree tree = NewDialogTree(npc);
    BuildMainBranch(tree, world, npc, context, corpus, local);
    if (npc.source && !npc.is_red_herring) {
      BuildSideBranches(tree, store.EntityFacts(*npc.source), corpus, local);
    }
    world.dialogs[npc.dialog_tree_id] = std::move(tree);
  }
}

}  // namespace mystery

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

#include "mystery/knowledge.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "mystery/errors.h"

namespace mystery {

namespace {

using nlohmann::json;

constexpr int kFixtureVersion = 1;

[[noreturn]] void FieldError(const std::string& field,
                             const std::string& problem) {
  throw Error(ErrorCode::kParseError, field + ": " + problem);
}

const json& Require(const json& object, const char* key,
                    const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) FieldError(where + "." + key, "missing");
  return *it;
}

std::string RequireString(const json& object, const char* key,
                          const std::string& where) {
  const json& value = Require(object, key, where);
  if (!value.is_string() || value.get<std::string>().empty()) {
    FieldError(where + "." + key, "expected non-empty string");
  }
  return value.get<std::string>();
}

std::vector<std::string> StringList(const json& value,
                                    const std::string& where) {
  if (!value.is_array()) FieldError(where, "expected array of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      FieldError(where + "[" + std::to_string(i) + "]", "expected string");
    }
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

size_t LineOfByte(std::string_view text, size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

EntityRecord ParseEntity(const json& entity, const std::string& where) {
  if (!entity.is_object()) FieldError(where, "expected object");
  EntityRecord record;
  record.ref.iri = RequireString(entity, "iri", where);
  record.ref.label = RequireString(entity, "label", where);

  EntityKind tagged = EntityKind::kOther;
  if (auto it = entity.find("kind"); it != entity.end()) {
    if (!it->is_string()) FieldError(where + ".kind", "expected string");
    const std::string kind = it->get<std::string>();
    if (kind != "person" && kind != "place" && kind != "other") {
      FieldError(where + ".kind", "unknown kind '" + kind + "'");
    }
    tagged = ParseEntityKind(kind);
  }

  const bool has_lat = entity.contains("lat");
  const bool has_lon = entity.contains("lon");
  if (has_lat != has_lon) FieldError(where, "lat and lon must appear together");
  if (has_lat) {
    const json& lat = entity["lat"];
    const json& lon = entity["lon"];
    if (!lat.is_number() || !lon.is_number()) {
      FieldError(where + ".lat/lon", "expected numbers");
    }
    Coordinates c{lat.get<double>(), lon.get<double>()};
    if (c.latitude < -90.0 || c.latitude > 90.0) {
      FieldError(where + ".lat", "out of range [-90, 90]");
    }
    if (c.longitude < -180.0 || c.longitude > 180.0) {
      FieldError(where + ".lon", "out of range [-180, 180]");
    }
    record.coordinates = c;
  }

  if (tagged == EntityKind::kPerson) {
    record.kind = EntityKind::kPerson;
  } else if (tagged == EntityKind::kPlace || record.coordinates) {
    record.kind = EntityKind::kPlace;
  } else {
    record.kind = EntityKind::kOther;
  }

  if (auto it = entity.find("characteristics"); it != entity.end()) {
    if (!it->is_object()) {
      FieldError(where + ".characteristics", "expected object");
    }
    for (const auto& [name, values] : it->items()) {
      const std::string field = where + ".characteristics." + name;
      auto list = StringList(values, field);
      if (list.empty()) FieldError(field, "characteristic without values");
      record.characteristics[name].insert(list.begin(), list.end());
    }
  }
  if (auto it = entity.find("abstract"); it != entity.end()) {
    if (!it->is_string()) FieldError(where + ".abstract", "expected string");
    record.abstract = it->get<std::string>();
  }
  if (auto it = entity.find("images"); it != entity.end()) {
    record.images = StringList(*it, where + ".images");
  }
  if (auto it = entity.find("gender"); it != entity.end()) {
    if (!it->is_string()) FieldError(where + ".gender", "expected string");
    const std::string g = it->get<std::string>();
    if (g != "male" && g != "female" && g != "unknown") {
      FieldError(where + ".gender", "unknown gender '" + g + "'");
    }
    record.gender = ParseGender(g);
  }
  return record;
}

}  // namespace

std::string_view EntityKindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kPerson: return "person";
    case EntityKind::kPlace: return "place";
    case EntityKind::kOther: return "other";
  }
  return "other";
}

EntityKind ParseEntityKind(std::string_view name) {
  if (name == "person") return EntityKind::kPerson;
  if (name == "place") return EntityKind::kPlace;
  return EntityKind::kOther;
}

std::string_view GenderName(Gender gender) {
  switch (gender) {
    case Gender::kMale: return "male";
    case Gender::kFemale: return "female";
    case Gender::kUnknown: return "unknown";
  }
  return "unknown";
}

Gender ParseGender(std::string_view name) {
  if (name == "male") return Gender::kMale;
  if (name == "female") return Gender::kFemale;
  return Gender::kUnknown;
}

const std::set<std::string>* EntityRecord::Values(
    const std::string& characteristic) const {
  auto it = characteristics.find(characteristic);
  return it == characteristics.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// FixtureSource

std::unique_ptr<FixtureSource> FixtureSource::Parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(LineOfByte(text, e.byte)) + ": " +
                    e.what());
  }
  if (!doc.is_object()) FieldError("$", "expected object");
  const json& version = Require(doc, "version", "$");
  if (!version.is_number_integer()) FieldError("$.version", "expected integer");
  if (version.get<int>() != kFixtureVersion) {
    throw Error(ErrorCode::kSchemaVersionMismatch,
                "fixture version " + version.dump() + ", expected " +
                    std::to_string(kFixtureVersion));
  }

  auto source = std::unique_ptr<FixtureSource>(new FixtureSource());
  const json& entities = Require(doc, "entities", "$");
  if (!entities.is_array()) FieldError("$.entities", "expected array");
  for (size_t i = 0; i < entities.size(); ++i) {
    const std::string where = "$.entities[" + std::to_string(i) + "]";
    EntityRecord record = ParseEntity(entities[i], where);
    const std::string iri = record.ref.iri;
    if (!source->records_.emplace(iri, std::move(record)).second) {
      FieldError(where + ".iri", "duplicate iri '" + iri + "'");
    }
  }

  if (auto it = doc.find("links"); it != doc.end()) {
    if (!it->is_array()) FieldError("$.links", "expected array");
    for (size_t i = 0; i < it->size(); ++i) {
      const std::string where = "$.links[" + std::to_string(i) + "]";
      const json& raw = (*it)[i];
      if (!raw.is_object()) FieldError(where, "expected object");
      const std::string from = RequireString(raw, "from", where);
      const std::string to = RequireString(raw, "to", where);
      const std::string predicate = RequireString(raw, "predicate", where);
      auto from_it = source->records_.find(from);
      auto to_it = source->records_.find(to);
      if (from_it == source->records_.end()) {
        FieldError(where + ".from", "unknown iri '" + from + "'");
      }
      if (to_it == source->records_.end()) {
        FieldError(where + ".to", "unknown iri '" + to + "'");
      }
      source->links_.push_back(
          Link{from_it->second.ref, to_it->second.ref, predicate});
    }
  }
  std::sort(source->links_.begin(), source->links_.end());
  source->links_.erase(
      std::unique(source->links_.begin(), source->links_.end()),
      source->links_.end());
  for (size_t i = 0; i < source->links_.size(); ++i) {
    const Link& link = source->links_[i];
    source->links_by_iri_[link.from.iri].push_back(i);
    if (link.to.iri != link.from.iri) {
      source->links_by_iri_[link.to.iri].push_back(i);
    }
  }

  if (auto it = doc.find("placeholders"); it != doc.end()) {
    if (!it->is_object()) FieldError("$.placeholders", "expected object");
    for (const char* key : {"male", "female", "neutral"}) {
      if (!it->contains(key)) continue;
      auto list = StringList((*it)[key], std::string("$.placeholders.") + key);
      if (std::string_view(key) == "male") source->placeholders_.male = list;
      if (std::string_view(key) == "female") {
        source->placeholders_.female = list;
      }
      if (std::string_view(key) == "neutral") {
        source->placeholders_.neutral = list;
      }
    }
  }
  return source;
}

std::optional<EntityRecord> FixtureSource::Fetch(const std::string& iri) {
  auto it = records_.find(iri);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

std::vector<Link> FixtureSource::LinksOf(const std::string& iri) {
  std::vector<Link> out;
  auto it = links_by_iri_.find(iri);
  if (it == links_by_iri_.end()) return out;
  for (size_t index : it->second) out.push_back(links_[index]);
  return out;
}

std::vector<EntityRef> FixtureSource::RelatedPersons(
    const EntityRecord& victim, size_t limit) {
  std::set<std::string> linked;
  for (const Link& link : LinksOf(victim.ref.iri)) {
    linked.insert(link.from.iri == victim.ref.iri ? link.to.iri
                                                  : link.from.iri);
  }
  std::vector<EntityRef> out;
  for (const auto& [iri, record] : records_) {  // iri order
    if (out.size() >= limit) break;
    if (iri == victim.ref.iri || record.kind != EntityKind::kPerson) continue;
    bool related = linked.count(iri) > 0;
    for (auto c = record.characteristics.begin();
         !related && c != record.characteristics.end(); ++c) {
      const auto* mine = victim.Values(c->first);
      if (mine == nullptr) continue;
      for (const std::string& value : c->second) {
        if (mine->count(value)) {
          related = true;
          break;
        }
      }
    }
    if (related) out.push_back(record.ref);
  }
  return out;
}

std::vector<EntityRef> FixtureSource::FindByLabel(const std::string& label) {
  std::vector<EntityRef> out;
  for (const auto& [iri, record] : records_) {
    if (record.ref.label == label) out.push_back(record.ref);
  }
  return out;
}

std::vector<EntityRef> FixtureSource::PlacesWithCoordinates(size_t limit) {
  std::vector<EntityRef> out;
  for (const auto& [iri, record] : records_) {
    if (out.size() >= limit) break;
    if (record.kind == EntityKind::kPlace && record.coordinates) {
      out.push_back(record.ref);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// KnowledgeStore

KnowledgeStore::KnowledgeStore(std::unique_ptr<KnowledgeSource> source,
                               bool caching)
    : source_(std::move(source)), caching_(caching) {}

KnowledgeStore KnowledgeStore::LoadFixture(const std::string& path,
                                           bool caching) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return FromFixtureText(buffer.str(), caching);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

KnowledgeStore KnowledgeStore::FromFixtureText(std::string_view text,
                                               bool caching) {
  return KnowledgeStore(FixtureSource::Parse(text), caching);
}

std::vector<EntityRef> KnowledgeStore::RelatedPersons(const EntityRef& victim,
                                                      size_t limit) {
  EntityRecord record;
  try {
    record = EntityFacts(victim);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEntityNotFound) throw;
    throw Error(ErrorCode::kVictimNotFound, victim.iri);
  }
  if (record.kind != EntityKind::kPerson) {
    throw Error(ErrorCode::kVictimNotPerson, victim.iri);
  }
  const std::string key = "related:" + victim.iri + ":" + std::to_string(limit);
  if (caching_) {
    std::lock_guard<std::mutex> lock(*mu_);
    if (auto it = ref_list_cache_.find(key); it != ref_list_cache_.end()) {
      return it->second;
    }
  }
  auto result = source_->RelatedPersons(record, limit);
  if (caching_) {
    std::lock_guard<std::mutex> lock(*mu_);
    ref_list_cache_.emplace(key, result);
  }
  return result;
}

EntityRecord KnowledgeStore::EntityFacts(const EntityRef& entity) {
  return EntityFacts(entity.iri);
}

EntityRecord KnowledgeStore::EntityFacts(const std::string& iri) {
  std::optional<EntityRecord> record;
  bool hit = false;
  if (caching_) {
    std::lock_guard<std::mutex> lock(*mu_);
    if (auto it = facts_cache_.find(iri); it != facts_cache_.end()) {
      record = it->second;
      hit = true;
    }
  }
  if (!hit) {
    record = source_->Fetch(iri);
    if (caching_) {
      std::lock_guard<std::mutex> lock(*mu_);
      facts_cache_.emplace(iri, record);
    }
  }
  if (!record) throw Error(ErrorCode::kEntityNotFound, iri);
  return *record;
}

bool KnowledgeStore::Contains(const std::string& iri) {
  try {
    EntityFacts(iri);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEntityNotFound) return false;
    throw;
  }
}

std::vector<Link> KnowledgeStore::Links(const EntityRef& entity) {
  if (caching_) {
    std::lock_guard<std::mutex> lock(*mu_);
    if (auto it = links_cache_.find(entity.iri); it != links_cache_.end()) {
      return it->second;
    }
  }
  auto links = source_->LinksOf(entity.iri);
  if (caching_) {
    std::lock_guard<std::mutex> lock(*mu_);
    links_cache_.emplace(entity.iri, links);
  }
  return links;
}

std::string KnowledgeStore::FindImage(const EntityRef& entity, Rng& rng) {
  std::optional<EntityRecord> record;
  try {
    record = EntityFacts(entity);
  } catch (const Error&) {
    // Unknown entities still get a neutral placeholder.
  }
  if (record && !record->images.empty()) return record->images.front();

  PlaceholderPool pool = Placeholders();
  if (record && record->kind == EntityKind::kPerson && record->gender) {
    const auto& gendered = *record->gender == Gender::kMale     ? pool.male
                           : *record->gender == Gender::kFemale ? pool.female
                                                                : pool.neutral;
    if (!gendered.empty()) return rng.Pick(gendered);
  }
  if (!pool.neutral.empty()) return pool.neutral.front();
  return "placeholder-neutral.png";
}

PlaceholderPool KnowledgeStore::Placeholders() {
  std::lock_guard<std::mutex> lock(*mu_);
  if (!placeholders_) placeholders_ = source_->Placeholders();
  return *placeholders_;
}

EntityRef KnowledgeStore::ResolveVictim(const std::string& name_or_iri) {
  EntityRecord record;
  if (Contains(name_or_iri)) {
    record = EntityFacts(name_or_iri);
  } else {
    auto matches = source_->FindByLabel(name_or_iri);
    if (matches.empty()) {
      throw Error(ErrorCode::kVictimNotFound, name_or_iri);
    }
    record = EntityFacts(matches.front());
  }
  if (record.kind != EntityKind::kPerson) {
    throw Error(ErrorCode::kVictimNotPerson, name_or_iri);
  }
  return record.ref;
}

std::vector<EntityRef> KnowledgeStore::PlacesWithCoordinates() {
  const std::string key = "places";
  if (caching_) {
    std::lock_guard<std::mutex> lock(*mu_);
    if (auto it = ref_list_cache_.find(key); it != ref_list_cache_.end()) {
      return it->second;
    }
  }
  auto result = source_->PlacesWithCoordinates(10000);
  if (caching_) {
    std::lock_guard<std::mutex> lock(*mu_);
    ref_list_cache_.emplace(key, result);
  }
  return result;
}

}  // namespace mystery

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

#ifndef MYSTERY_KNOWLEDGE_H_
#define MYSTERY_KNOWLEDGE_H_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mystery/rng.h"

namespace mystery {

enum class EntityKind { kPerson, kPlace, kOther };
enum class Gender { kMale, kFemale, kUnknown };
enum class StoreMode { kLive, kFixture };

std::string_view EntityKindName(EntityKind kind);
EntityKind ParseEntityKind(std::string_view name);
std::string_view GenderName(Gender gender);
Gender ParseGender(std::string_view name);

struct EntityRef {
  std::string iri;
  std::string label;

  auto operator<=>(const EntityRef&) const = default;
};

struct Coordinates {
  double latitude = 0.0;
  double longitude = 0.0;

  bool operator==(const Coordinates&) const = default;
};

using Characteristics = std::map<std::string, std::set<std::string>>;

struct EntityRecord {
  EntityRef ref;
  EntityKind kind = EntityKind::kOther;
  Characteristics characteristics;
  std::optional<Coordinates> coordinates;
  std::optional<std::string> abstract;
  std::vector<std::string> images;
  std::optional<Gender> gender;

  bool operator==(const EntityRecord&) const = default;

  // Values held for a characteristic, or nullptr when absent.
  const std::set<std::string>* Values(const std::string& characteristic) const;
};

struct Link {
  EntityRef from;
  EntityRef to;
  std::string predicate;

  auto operator<=>(const Link&) const = default;
};

struct PlaceholderPool {
  std::vector<std::string> male;
  std::vector<std::string> female;
  std::vector<std::string> neutral;
};

// Backend of a KnowledgeStore. Implementations return results in iri order.
class KnowledgeSource {
 public:
  virtual ~KnowledgeSource() = default;

  virtual StoreMode mode() const = 0;
  virtual std::optional<EntityRecord> Fetch(const std::string& iri) = 0;
  // Every link touching the entity, in either direction.
  virtual std::vector<Link> LinksOf(const std::string& iri) = 0;
  virtual std::vector<EntityRef> RelatedPersons(const EntityRecord& victim,
                                                size_t limit) = 0;
  virtual std::vector<EntityRef> FindByLabel(const std::string& label) = 0;
  virtual std::vector<EntityRef> PlacesWithCoordinates(size_t limit) = 0;
  virtual PlaceholderPool Placeholders() = 0;
};

// Source-agnostic, cached view of the knowledge graph. Read-only after
// construction; the cache is guarded so concurrent readers are safe.
class KnowledgeStore {
 public:
  explicit KnowledgeStore(std::unique_ptr<KnowledgeSource> source,
                          bool caching = true);

  static KnowledgeStore LoadFixture(const std::string& path,
                                    bool caching = true);
  static KnowledgeStore FromFixtureText(std::string_view text,
                                        bool caching = true);

  StoreMode mode() const { return source_->mode(); }

  // Persons sharing a characteristic value or a direct link with the
  // victim, iri-sorted and truncated to `limit`.
  std::vector<EntityRef> RelatedPersons(const EntityRef& victim, size_t limit);

  EntityRecord EntityFacts(const EntityRef& entity);
  EntityRecord EntityFacts(const std::string& iri);
  bool Contains(const std::string& iri);

  std::vector<Link> Links(const EntityRef& entity);

  // Never fails: own image, then a gender-matched placeholder, then a
  // neutral placeholder.
  std::string FindImage(const EntityRef& entity, Rng& rng);

  // Resolves a victim given either an iri or a display label.
  EntityRef ResolveVictim(const std::string& name_or_iri);

  std::vector<EntityRef> PlacesWithCoordinates();

  // Generic portraits used for characters without their own image.
  PlaceholderPool Placeholders();

 private:
  std::unique_ptr<KnowledgeSource> source_;
  bool caching_;
  std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
  std::map<std::string, std::optional<EntityRecord>> facts_cache_;
  std::map<std::string, std::vector<Link>> links_cache_;
  std::map<std::string, std::vector<EntityRef>> ref_list_cache_;
  std::optional<PlaceholderPool> placeholders_;
};

// In-memory fixture snapshot, the hermetic backend used by tests and the
// bundled example games.
class FixtureSource : public KnowledgeSource {
 public:
  static std::unique_ptr<FixtureSource> Parse(std::string_view text);

  StoreMode mode() const override { return StoreMode::kFixture; }
  std::optional<EntityRecord> Fetch(const std::string& iri) override;
  std::vector<Link> LinksOf(const std::string& iri) override;
  std::vector<EntityRef> RelatedPersons(const EntityRecord& victim,
                                        size_t limit) override;
  std::vector<EntityRef> FindByLabel(const std::string& label) override;
  std::vector<EntityRef> PlacesWithCoordinates(size_t limit) override;
  PlaceholderPool Placeholders() override { return placeholders_; }

  size_t entity_count() const { return records_.size(); }
  size_t link_count() const { return links_.size(); }

 private:
  std::map<std::string, EntityRecord> records_;
  std::vector<Link> links_;
  std::map<std::string, std::vector<size_t>> links_by_iri_;
  PlaceholderPool placeholders_;
};

}  // namespace mystery

#endif  // MYSTERY_KNOWLEDGE_H_

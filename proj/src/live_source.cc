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

#include "mystery/live_source.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "mystery/errors.h"

namespace mystery {

namespace {

using nlohmann::json;

const char* const kDefaultAllowlist[] = {
    "http://dbpedia.org/ontology/birthPlace",
    "http://dbpedia.org/ontology/deathPlace",
    "http://dbpedia.org/ontology/field",
    "http://dbpedia.org/ontology/almaMater",
    "http://dbpedia.org/ontology/award",
    "http://dbpedia.org/ontology/occupation",
    "http://dbpedia.org/ontology/party",
    "http://purl.org/dc/terms/subject",
};

constexpr char kRdfType[] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr char kLabel[] = "http://www.w3.org/2000/01/rdf-schema#label";
constexpr char kPersonClass[] = "http://dbpedia.org/ontology/Person";
constexpr char kPlaceClass[] = "http://dbpedia.org/ontology/Place";
constexpr char kLat[] = "http://www.w3.org/2003/01/geo/wgs84_pos#lat";
constexpr char kLong[] = "http://www.w3.org/2003/01/geo/wgs84_pos#long";
constexpr char kAbstract[] = "http://dbpedia.org/ontology/abstract";
constexpr char kDepiction[] = "http://xmlns.com/foaf/0.1/depiction";
constexpr char kGender[] = "http://xmlns.com/foaf/0.1/gender";
constexpr char kResourcePrefix[] = "http://dbpedia.org/resource/";

std::string LocalName(const std::string& iri) {
  size_t cut = iri.find_last_of("/#");
  std::string name = cut == std::string::npos ? iri : iri.substr(cut + 1);
  std::replace(name.begin(), name.end(), '_', ' ');
  return name;
}

std::string Escape(const std::string& literal) {
  std::string out;
  for (char c : literal) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

class LiveSource : public KnowledgeSource {
 public:
  explicit LiveSource(LiveConfig config) : config_(std::move(config)) {
    if (config_.predicate_allowlist.empty()) {
      for (const char* p : kDefaultAllowlist) {
        config_.predicate_allowlist.emplace_back(p);
      }
    }
    const std::string& url = config_.endpoint;
    size_t scheme_end = url.find("://");
    size_t path_start = url.find('/', scheme_end == std::string::npos
                                          ? 0
                                          : scheme_end + 3);
    if (scheme_end == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "endpoint must be a URL");
    }
    base_ = path_start == std::string::npos ? url : url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  }

  StoreMode mode() const override { return StoreMode::kLive; }

  std::optional<EntityRecord> Fetch(const std::string& iri) override {
    auto rows = Query("SELECT ?p ?o WHERE { <" + iri + "> ?p ?o }");
    if (rows.empty()) return std::nullopt;
    EntityRecord record;
    record.ref.iri = iri;
    bool person = false;
    bool place = false;
    std::optional<double> lat;
    std::optional<double> lon;
    for (const auto& row : rows) {
      auto p = row.find("p");
      auto o = row.find("o");
      if (p == row.end() || o == row.end()) continue;
      const std::string& pred = p->second;
      const std::string& obj = o->second;
      if (pred == kRdfType) {
        person |= obj == kPersonClass;
        place |= obj == kPlaceClass;
      } else if (pred == kLabel) {
        if (record.ref.label.empty()) record.ref.label = obj;
      } else if (pred == kLat) {
        lat = std::atof(obj.c_str());
      } else if (pred == kLong) {
        lon = std::atof(obj.c_str());
      } else if (pred == kAbstract) {
        if (!record.abstract) record.abstract = obj;
      } else if (pred == kDepiction) {
        record.images.push_back(obj);
      } else if (pred == kGender) {
        record.gender = ParseGender(obj);
      } else {
        const std::string value =
            obj.rfind(kResourcePrefix, 0) == 0 ? LocalName(obj) : obj;
        record.characteristics[LocalName(pred)].insert(value);
      }
    }
    if (record.ref.label.empty()) record.ref.label = LocalName(iri);
    if (lat && lon && *lat >= -90 && *lat <= 90 && *lon >= -180 &&
        *lon <= 180) {
      record.coordinates = Coordinates{*lat, *lon};
    }
    record.kind = person                        ? EntityKind::kPerson
                  : (place || record.coordinates) ? EntityKind::kPlace
                                                  : EntityKind::kOther;
    return record;
  }

  std::vector<Link> LinksOf(const std::string& iri) override {
    std::vector<Link> out;
    const std::string filter = "FILTER(STRSTARTS(STR(?x), \"" +
                               std::string(kResourcePrefix) + "\"))";
    for (bool outgoing : {true, false}) {
      const std::string pattern = outgoing ? "<" + iri + "> ?p ?x"
                                           : "?x ?p <" + iri + ">";
      auto rows = Query("SELECT ?p ?x ?label WHERE { " + pattern + " . " +
                        filter + " OPTIONAL { ?x <" + kLabel +
                        "> ?label . FILTER(LANG(?label) = \"" +
                        config_.language + "\") } } ORDER BY ?x LIMIT 500");
      for (const auto& row : rows) {
        auto x = row.find("x");
        auto p = row.find("p");
        if (x == row.end() || p == row.end() || x->second == iri) continue;
        EntityRef other{x->second, row.count("label") ? row.at("label")
                                                      : LocalName(x->second)};
        EntityRef self{iri, LocalName(iri)};
        out.push_back(outgoing ? Link{self, other, LocalName(p->second)}
                               : Link{other, self, LocalName(p->second)});
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<EntityRef> RelatedPersons(const EntityRecord& victim,
                                        size_t limit) override {
    std::string values;
    for (const auto& p : config_.predicate_allowlist) values += "<" + p + "> ";
    auto rows = Query(
        "SELECT DISTINCT ?s ?label WHERE { VALUES ?p { " + values + "} <" +
        victim.ref.iri + "> ?p ?o . ?s ?p ?o . ?s <" + kRdfType + "> <" +
        kPersonClass + "> . FILTER(?s != <" + victim.ref.iri +
        ">) OPTIONAL { ?s <" + kLabel + "> ?label . FILTER(LANG(?label) = \"" +
        config_.language + "\") } } ORDER BY ?s LIMIT " +
        std::to_string(limit));
    return Refs(rows, "s");
  }

  std::vector<EntityRef> FindByLabel(const std::string& label) override {
    auto rows = Query("SELECT ?s ?label WHERE { ?s <" + std::string(kLabel) +
                      "> \"" + Escape(label) + "\"@" + config_.language +
                      " . ?s <" + kLabel + "> ?label } ORDER BY ?s LIMIT 10");
    return Refs(rows, "s");
  }

  std::vector<EntityRef> PlacesWithCoordinates(size_t limit) override {
    auto rows = Query("SELECT ?s ?label WHERE { ?s <" + std::string(kRdfType) +
                      "> <" + kPlaceClass + "> ; <" + kLat + "> ?lat ; <" +
                      kLabel + "> ?label . FILTER(LANG(?label) = \"" +
                      config_.language + "\") } ORDER BY ?s LIMIT " +
                      std::to_string(limit));
    return Refs(rows, "s");
  }

  PlaceholderPool Placeholders() override { return {}; }

 private:
  std::vector<EntityRef> Refs(const std::vector<SparqlRow>& rows,
                              const std::string& var) {
    std::vector<EntityRef> out;
    std::set<std::string> seen;
    for (const auto& row : rows) {
      auto it = row.find(var);
      if (it == row.end() || !seen.insert(it->second).second) continue;
      auto label = row.find("label");
      out.push_back({it->second, label != row.end() ? label->second
                                                    : LocalName(it->second)});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<SparqlRow> Query(const std::string& sparql) {
    httplib::Client client(base_);
    client.set_connection_timeout(config_.timeout_seconds, 0);
    client.set_read_timeout(config_.timeout_seconds, 0);
    httplib::Params params{{"query", sparql},
                           {"format", "application/sparql-results+json"}};
    httplib::Headers headers{{"Accept", "application/sparql-results+json"}};
    auto response = client.Get(path_, params, headers);
    if (!response) {
      throw Error(ErrorCode::kSourceUnavailable,
                  config_.endpoint + ": " + httplib::to_string(response.error()));
    }
    if (response->status != 200) {
      throw Error(ErrorCode::kSourceUnavailable,
                  config_.endpoint + ": HTTP " +
                      std::to_string(response->status));
    }
    return ParseSparqlResults(response->body);
  }

  LiveConfig config_;
  std::string base_;
  std::string path_;
};

}  // namespace

LiveConfig LiveConfigFromEnvironment() {
  LiveConfig config;
  if (const char* endpoint = std::getenv("MYSTERY_SPARQL_ENDPOINT")) {
    config.endpoint = endpoint;
  }
  if (const char* timeout = std::getenv("MYSTERY_SPARQL_TIMEOUT")) {
    config.timeout_seconds = std::max(1, std::atoi(timeout));
  }
  return config;
}

std::unique_ptr<KnowledgeSource> MakeLiveSource(const LiveConfig& config) {
  return std::make_unique<LiveSource>(config);
}

std::vector<SparqlRow> ParseSparqlResults(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSourceUnavailable,
                std::string("malformed SPARQL response: ") + e.what());
  }
  std::vector<SparqlRow> rows;
  const json* bindings = nullptr;
  if (doc.contains("results") && doc["results"].contains("bindings")) {
    bindings = &doc["results"]["bindings"];
  }
  if (bindings == nullptr || !bindings->is_array()) {
    throw Error(ErrorCode::kSourceUnavailable,
                "SPARQL response without results.bindings");
  }
  for (const json& binding : *bindings) {
    SparqlRow row;
    for (const auto& [name, term] : binding.items()) {
      if (term.contains("value") && term["value"].is_string()) {
        row[name] = term["value"].get<std::string>();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mystery

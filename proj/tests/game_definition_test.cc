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

#include "mystery/game_definition.h"

#include <gtest/gtest.h>

#include <cctype>

#include "mystery/errors.h"
#include "test_support.h"

namespace mystery {
namespace {

using json = nlohmann::json;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(SerializeDefinitionTest, TopLevelKeysInDocumentOrder) {
  json doc = json::parse(SerializeDefinition(testing::TinyGame(1)));
  std::vector<std::string> keys;
  auto ordered =
      nlohmann::ordered_json::parse(SerializeDefinition(testing::TinyGame(1)));
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"version", "metadata", "world",
                                            "dialogTrees", "triggerGraph",
                                            "puzzles", "solution"}));
  EXPECT_EQ(doc["version"], kDefinitionVersion);
}

TEST(SerializeDefinitionTest, RoundTripIsByteIdentical) {
  for (uint64_t seed : {1, 2}) {
    for (const GameDefinition& def :
         {testing::EinsteinGame(seed), testing::GandhiGame(seed),
          testing::TinyGame(seed, 1.0, 1.0)}) {
      std::string text = SerializeDefinition(def);
      ASSERT_FALSE(text.empty());
      EXPECT_EQ(text.back(), '\n');
      GameDefinition back = ParseDefinition(text);
      EXPECT_EQ(SerializeDefinition(back), text);
      EXPECT_EQ(back.metadata, def.metadata);
      EXPECT_EQ(back.triggers, def.triggers);
      EXPECT_EQ(back.world.npcs.size(), def.world.npcs.size());
      EXPECT_EQ(back.world.plot.size(), def.world.plot.size());
      EXPECT_EQ(back.solution.culprit, def.solution.culprit);
      EXPECT_EQ(back.solution.evidence, def.solution.evidence);
      EXPECT_EQ(DefinitionHash(back), DefinitionHash(def));
    }
  }
}

TEST(SerializeDefinitionTest, SaveAndLoadFile) {
  GameDefinition def = testing::TinyGame(3);
  std::string path = testing::TempDir("definition") + "/tiny.json";
  SaveDefinition(def, path);
  EXPECT_EQ(ReadTextFile(path), SerializeDefinition(def));
  EXPECT_EQ(SerializeDefinition(LoadDefinition(path)),
            SerializeDefinition(def));
}

TEST(ParseDefinitionTest, GeneratedDocumentsPassTheSchema) {
  for (uint64_t seed : {1, 2, 3}) {
    json doc = json::parse(SerializeDefinition(testing::GandhiGame(seed)));
    EXPECT_TRUE(ValidateSchema(doc, DefinitionSchema()).empty());
  }
}

TEST(ParseDefinitionTest, VersionMismatch) {
  json doc = json::parse(SerializeDefinition(testing::TinyGame(1)));
  doc["version"] = 2;
  EXPECT_EQ(CodeOf([&] { ParseDefinition(doc.dump()); }),
            ErrorCode::kSchemaVersionMismatch);
}

TEST(ParseDefinitionTest, MalformedJsonReportsTheLine) {
  try {
    ParseDefinition("{\n  \"version\": 1,\n  oops\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
}

TEST(ParseDefinitionTest, SchemaViolationsNameTheirPath) {
  json doc = json::parse(SerializeDefinition(testing::TinyGame(1)));
  doc.erase("solution");
  doc["world"]["startCity"] = 7;
  doc["extra"] = true;
  try {
    ParseDefinition(doc.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDefinition);
    std::string what = e.what();
    EXPECT_NE(what.find("solution"), std::string::npos) << what;
    EXPECT_NE(what.find("startCity"), std::string::npos) << what;
    EXPECT_NE(what.find("extra"), std::string::npos) << what;
  }
}

TEST(ParseDefinitionTest, MissingFile) {
  EXPECT_THROW(LoadDefinition("/nonexistent/definition.json"), Error);
}

TEST(ValidateSchemaTest, SupportedKeywords) {
  json schema = json::parse(R"({
    "$defs": {"pos": {"type": "integer", "minimum": 1}},
    "type": "object",
    "required": ["a", "b"],
    "additionalProperties": false,
    "properties": {
      "a": {"$ref": "#/$defs/pos"},
      "b": {"type": "array", "minItems": 1,
            "items": {"type": "string", "enum": ["x", "y"]}},
      "c": {"type": ["string", "null"]}
    }})");
  EXPECT_TRUE(ValidateSchema(json::parse(R"({"a": 2, "b": ["x"]})"), schema)
                  .empty());
  EXPECT_TRUE(ValidateSchema(json::parse(R"({"a": 2, "b": ["y"], "c": null})"),
                             schema)
                  .empty());
  EXPECT_EQ(ValidateSchema(json::parse(R"({"a": 0, "b": ["x"]})"), schema)
                .size(),
            1u);
  EXPECT_EQ(ValidateSchema(json::parse(R"({"a": 1.5, "b": ["x"]})"), schema)
                .size(),
            1u);
  EXPECT_EQ(ValidateSchema(json::parse(R"({"a": 1, "b": []})"), schema).size(),
            1u);
  EXPECT_EQ(ValidateSchema(json::parse(R"({"a": 1, "b": ["z"]})"), schema)
                .size(),
            1u);
  EXPECT_EQ(ValidateSchema(json::parse(R"({"b": ["x"], "d": 1})"), schema)
                .size(),
            2u);
  EXPECT_EQ(ValidateSchema(json::parse(R"([1])"), schema).size(), 1u);
}

TEST(DefinitionHashTest, FnvReferenceVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(DefinitionHashTest, SixteenHexDigitsThatTrackContent) {
  GameDefinition def = testing::TinyGame(1);
  std::string h = DefinitionHash(def);
  ASSERT_EQ(h.size(), 16u);
  for (char c : h) EXPECT_TRUE(std::isxdigit(static_cast<unsigned char>(c)));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(SerializeDefinition(def))));
  EXPECT_EQ(h, buf);
  EXPECT_EQ(DefinitionHash(testing::TinyGame(1)), h);
  def.metadata.seed += 1;
  EXPECT_NE(DefinitionHash(def), h);
}

TEST(JsonHelpersTest, EvidenceRoundTrip) {
  EvidenceTriple e{{"p:avery", "Tex Avery"}, "deathYear", "1980"};
  EXPECT_EQ(EvidenceFromJson(json::parse(EvidenceToJson(e).dump())), e);
  EntityRef r{"p:x", "X"};
  EXPECT_EQ(EntityRefFromJson(json::parse(EntityRefToJson(r).dump())), r);
}

}  // namespace
}  // namespace mystery

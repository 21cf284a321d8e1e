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

#include "mystery/paths.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "mystery/errors.h"
#include "mystery/suspects.h"
#include "oracles.h"
#include "test_support.h"

namespace mystery {
namespace {

std::string Entity(const std::string& iri, const std::string& kind) {
  return R"({"iri": ")" + iri + R"(", "label": ")" + iri + R"(", "kind": ")" +
         kind + R"("})";
}

std::string Link(const std::string& from, const std::string& to,
                 const std::string& predicate = "rel") {
  return R"({"from": ")" + from + R"(", "to": ")" + to +
         R"(", "predicate": ")" + predicate + R"("})";
}

std::string Fixture(const std::vector<std::string>& entities,
                    const std::vector<std::string>& links) {
  std::string text = R"({"version": 1, "entities": [)";
  for (size_t i = 0; i < entities.size(); ++i) {
    text += (i ? "," : "") + entities[i];
  }
  text += R"(], "links": [)";
  for (size_t i = 0; i < links.size(); ++i) text += (i ? "," : "") + links[i];
  return text + "]}";
}

std::vector<std::string> Iris(const Path& path) {
  std::vector<std::string> out;
  for (const auto& n : path.nodes) out.push_back(n.iri);
  return out;
}

std::set<std::vector<std::string>> IriSet(const std::vector<Path>& paths) {
  std::set<std::vector<std::string>> out;
  for (const auto& p : paths) {
    std::vector<std::string> key = Iris(p);
    for (const auto& e : p.edges) {
      key.push_back(e.predicate +
                    (e.direction == EdgeDirection::kForward ? ">" : "<"));
    }
    out.insert(key);
  }
  return out;
}

// Oracle argmax: highest score, then more nodes, then smaller iris.
const Path& OracleBest(const std::vector<Path>& all) {
  const Path* best = nullptr;
  double best_score = 0.0;
  for (const Path& p : all) {
    double s = oracle::ScoreByFrequency(p, all);
    bool better = best == nullptr || s > best_score + 1e-12;
    if (!better && std::abs(s - best_score) <= 1e-12) {
      if (p.nodes.size() != best->nodes.size()) {
        better = p.nodes.size() > best->nodes.size();
      } else {
        better = Iris(p) < Iris(*best);
      }
    }
    if (better) {
      best = &p;
      best_score = s;
    }
  }
  return *best;
}

TEST(FindMajorPathTest, DirectLinkOnlyGivesTwoNodes) {
  KnowledgeStore store = KnowledgeStore::FromFixtureText(
      Fixture({Entity("v", "person"), Entity("s", "person")}, {Link("v", "s")}));
  Path p = FindMajorPath({"v", "v"}, {"s", "s"}, store);
  EXPECT_EQ(Iris(p), (std::vector<std::string>{"v", "s"}));
  ASSERT_EQ(p.edges.size(), 1u);
  EXPECT_EQ(p.edges[0].direction, EdgeDirection::kForward);
}

TEST(FindMajorPathTest, LongerPathWinsAtEqualUniqueness) {
  // v-a-s and v-b-c-s: all persons, one predicate, so uniqueness is zero
  // for both and only length separates them.
  KnowledgeStore store = KnowledgeStore::FromFixtureText(Fixture(
      {Entity("v", "person"), Entity("a", "person"), Entity("b", "person"),
       Entity("c", "person"), Entity("s", "person")},
      {Link("v", "a"), Link("a", "s"), Link("v", "b"), Link("b", "c"),
       Link("c", "s")}));
  auto all = EnumeratePaths({"v", "v"}, {"s", "s"}, store, {});
  ASSERT_EQ(all.size(), 2u);
  for (const auto& p : all) {
    EXPECT_DOUBLE_EQ(ScorePath(p, all).uniqueness_term, 0.0);
  }
  Path best = FindMajorPath({"v", "v"}, {"s", "s"}, store);
  EXPECT_EQ(Iris(best), (std::vector<std::string>{"v", "b", "c", "s"}));
}

TEST(FindMajorPathTest, LongerPreferredWhenTotalsTie) {
  std::vector<Path> paths(2);
  paths[0].nodes = {{"v", ""}, {"a", ""}, {"s", ""}};
  paths[1].nodes = {{"v", ""}, {"b", ""}, {"c", ""}, {"s", ""}};
  PathWeights weights;
  weights.length = 0.0;
  weights.uniqueness = 0.0;
  EXPECT_EQ(BestPathIndex(paths, weights), 1u);
}

TEST(FindMajorPathTest, NoPathWithinCapThrows) {
  KnowledgeStore store = KnowledgeStore::FromFixtureText(Fixture(
      {Entity("v", "person"), Entity("a", "other"), Entity("b", "other"),
       Entity("c", "other"), Entity("d", "other"), Entity("s", "person")},
      {Link("v", "a"), Link("a", "b"), Link("b", "c"), Link("c", "d"),
       Link("d", "s")}));
  try {
    FindMajorPath({"v", "v"}, {"s", "s"}, store);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoPathFound);
  }
  PathSearchOptions wide;
  wide.max_nodes = 6;
  EXPECT_EQ(FindMajorPath({"v", "v"}, {"s", "s"}, store, wide).length(), 6u);
}

std::string TwelveCandidateFixture() {
  return Fixture(
      {Entity("v", "person"), Entity("s", "person"), Entity("a1", "place"),
       Entity("a2", "place"), Entity("a3", "other"), Entity("b", "person"),
       Entity("c1", "other"), Entity("c2", "person"), Entity("d1", "place"),
       Entity("d2", "person"), Entity("d3", "other"), Entity("e", "other"),
       Entity("f", "place"), Entity("g", "person"), Entity("h", "person"),
       Entity("i", "other")},
      {Link("v", "a1", "birthPlace"), Link("a1", "s", "birthPlace"),
       Link("v", "a2", "residence"), Link("a2", "s", "residence"),
       Link("v", "a3", "subject"), Link("a3", "s", "subject"),
       Link("v", "s", "influenced"), Link("v", "b", "colleague"),
       Link("b", "c1", "knownFor"), Link("b", "c2", "doctoralAdvisor"),
       Link("c1", "s", "knownFor"), Link("c2", "s", "doctoralAdvisor"),
       Link("v", "d1", "residence"), Link("d1", "d2", "residence"),
       Link("d2", "d3", "award"), Link("d3", "s", "award"),
       Link("d2", "i", "knownFor"), Link("i", "s", "knownFor"),
       Link("v", "e", "subject"), Link("e", "f", "location"),
       Link("f", "s", "birthPlace"), Link("f", "s", "residence"),
       Link("v", "g", "spouse"), Link("g", "a1", "birthPlace"),
       Link("v", "h", "colleague"), Link("h", "c1", "knownFor")});
}

TEST(EnumeratePathsTest, TwelveCandidateFixtureMatchesBruteForce) {
  KnowledgeStore store =
      KnowledgeStore::FromFixtureText(TwelveCandidateFixture());
  auto brute = oracle::AllSimplePaths(store, {"v", "v"}, {"s", "s"}, 5);
  auto found = EnumeratePaths({"v", "v"}, {"s", "s"}, store, {});
  EXPECT_EQ(IriSet(found), IriSet(brute));
  ASSERT_EQ(brute.size(), 12u);
  Path chosen = FindMajorPath({"v", "v"}, {"s", "s"}, store);
  EXPECT_EQ(Iris(chosen), Iris(OracleBest(brute)));
  for (const auto& p : brute) {
    EXPECT_NEAR(ScorePath(p, found).total, oracle::ScoreByFrequency(p, brute),
                1e-9);
  }
}

TEST(EnumeratePathsTest, BundledFixturesMatchBruteForce) {
  KnowledgeStore store =
      KnowledgeStore::LoadFixture(testing::GandhiFixture());
  PathSearchOptions options;
  options.max_nodes = 4;
  for (const char* target : {"p:lyons", "p:avery", "p:verma", "p:zotz",
                             "p:srosen"}) {
    auto brute = oracle::AllSimplePaths(store, {"p:gandhi", ""},
                                        {target, ""}, options.max_nodes);
    auto found = EnumeratePaths({"p:gandhi", ""}, {target, ""}, store, options);
    EXPECT_EQ(IriSet(found), IriSet(brute)) << target;
    ASSERT_FALSE(brute.empty());
    Path chosen = FindMajorPath({"p:gandhi", ""}, {target, ""}, store, options);
    EXPECT_EQ(Iris(chosen), Iris(OracleBest(brute))) << target;
  }
}

TEST(ScorePathTest, SingleCandidateScoresItsLength) {
  Path p;
  p.nodes = {{"v", ""}, {"s", ""}};
  p.kinds = {EntityKind::kPerson, EntityKind::kPerson};
  p.edges = {{"rel", EdgeDirection::kForward, false}};
  PathScore s = ScorePath(p, {p});
  EXPECT_DOUBLE_EQ(s.uniqueness_term, 0.0);
  EXPECT_DOUBLE_EQ(s.total, 2.0);
}

Path MakePath(std::vector<EntityKind> kinds,
              std::vector<std::string> predicates) {
  Path p;
  for (size_t i = 0; i < kinds.size(); ++i) {
    p.nodes.push_back({"n" + std::to_string(i), ""});
    p.kinds.push_back(kinds[i]);
  }
  for (const auto& pr : predicates) {
    p.edges.push_back({pr, EdgeDirection::kForward, false});
  }
  return p;
}

TEST(ScorePathTest, RarePredicateScoresHigher) {
  using K = EntityKind;
  Path common = MakePath({K::kPerson, K::kPlace, K::kPerson},
                         {"birthPlace", "birthPlace"});
  Path rare = MakePath({K::kPerson, K::kPlace, K::kPerson},
                       {"birthPlace", "influenced"});
  std::vector<Path> all{common, common, rare};
  EXPECT_GT(ScorePath(rare, all).uniqueness_term,
            ScorePath(common, all).uniqueness_term);
}

TEST(ScorePathTest, MixedPathBeatsAllLocations) {
  using K = EntityKind;
  Path places = MakePath({K::kPlace, K::kPlace, K::kPlace, K::kPlace},
                         {"location", "location", "location"});
  Path mixed = MakePath({K::kPlace, K::kPerson, K::kPlace, K::kPlace},
                        {"location", "residence", "location"});
  std::vector<Path> all{places, places, mixed};
  EXPECT_GT(ScorePath(mixed, all).total, ScorePath(places, all).total);
}

TEST(ScorePathTest, DuplicatingCandidatesLeavesScoresUnchanged) {
  KnowledgeStore store =
      KnowledgeStore::FromFixtureText(TwelveCandidateFixture());
  auto all = EnumeratePaths({"v", "v"}, {"s", "s"}, store, {});
  std::vector<Path> doubled = all;
  doubled.insert(doubled.end(), all.begin(), all.end());
  for (const auto& p : all) {
    EXPECT_NEAR(ScorePath(p, all).total, ScorePath(p, doubled).total, 1e-12);
  }
}

TEST(ScorePathTest, UnrelatedCandidateKeepsPreviousBestAmongOriginals) {
  KnowledgeStore store =
      KnowledgeStore::FromFixtureText(TwelveCandidateFixture());
  auto all = EnumeratePaths({"v", "v"}, {"s", "s"}, store, {});
  size_t before = BestPathIndex(all, {});
  Path outsider = MakePath({EntityKind::kOther, EntityKind::kOther},
                           {"neverSeenPredicate"});
  std::vector<Path> extended = all;
  extended.push_back(outsider);
  size_t best = 0;
  double best_total = -1.0;
  for (size_t i = 0; i < all.size(); ++i) {
    double t = ScorePath(all[i], extended).total;
    if (t > best_total + 1e-12) {
      best_total = t;
      best = i;
    } else if (std::abs(t - best_total) <= 1e-12 &&
               all[i].length() > all[best].length()) {
      best = i;
    }
  }
  EXPECT_EQ(Iris(all[best]), Iris(all[before]));
}

TEST(ExpandMinorPathsTest, NoIntermediaryKeepsThePath) {
  KnowledgeStore store = KnowledgeStore::FromFixtureText(
      Fixture({Entity("v", "person"), Entity("a", "person"),
               Entity("s", "person")},
              {Link("v", "a"), Link("a", "s")}));
  Path major = FindMajorPath({"v", "v"}, {"s", "s"}, store);
  Path expanded = ExpandMinorPaths(major, store);
  EXPECT_EQ(Iris(expanded), Iris(major));
  EXPECT_EQ(expanded.edges, major.edges);
}

TEST(ExpandMinorPathsTest, SplicesAThreeNodeMinorPath) {
  // Major v-a-s via the direct links; a-m-s offers a minor detour.
  KnowledgeStore store = KnowledgeStore::FromFixtureText(
      Fixture({Entity("v", "person"), Entity("a", "person"),
               Entity("m", "place"), Entity("s", "person")},
              {Link("v", "a"), Link("a", "s"), Link("a", "m", "birthPlace"),
               Link("m", "s", "birthPlace")}));
  Path major;
  major.nodes = {{"v", "v"}, {"a", "a"}, {"s", "s"}};
  major.kinds = {EntityKind::kPerson, EntityKind::kPerson, EntityKind::kPerson};
  major.edges = {{"rel", EdgeDirection::kForward, false},
                 {"rel", EdgeDirection::kForward, false}};
  major.major_nodes = {true, true, true};
  Path expanded = ExpandMinorPaths(major, store);
  EXPECT_EQ(expanded.length(), major.length() + 1);
  EXPECT_EQ(Iris(expanded), (std::vector<std::string>{"v", "a", "m", "s"}));
  EXPECT_EQ(expanded.major_nodes,
            (std::vector<bool>{true, true, false, true}));
  EXPECT_TRUE(expanded.edges[1].minor);
  EXPECT_FALSE(expanded.edges[0].minor);
}

Path Straight(const std::vector<std::string>& iris) {
  Path p;
  for (const auto& i : iris) {
    p.nodes.push_back({i, i});
    p.kinds.push_back(EntityKind::kPerson);
    p.major_nodes.push_back(true);
  }
  for (size_t i = 1; i < iris.size(); ++i) {
    p.edges.push_back({"rel", EdgeDirection::kForward, false});
  }
  return p;
}

TEST(BuildPlotTreeTest, DisjointPathsShareOnlyTheRoot) {
  PlotTree tree = BuildPlotTree(
      {"v", "v"}, {{{"s1", "s1"}, Straight({"v", "a", "s1"})},
                   {{"s2", "s2"}, Straight({"v", "b", "c", "s2"})}});
  EXPECT_EQ(tree.size(), 3u + 4u - 1u);
  EXPECT_EQ(tree.root().children.size(), 2u);
  ASSERT_EQ(tree.suspect_leaves.size(), 2u);
  for (int leaf : tree.suspect_leaves) {
    EXPECT_TRUE(tree.nodes[leaf].children.empty());
  }
}

TEST(BuildPlotTreeTest, SharedPrefixIsMergedOnce) {
  PlotTree tree = BuildPlotTree(
      {"v", "v"}, {{{"s1", "s1"}, Straight({"v", "a", "b", "s1"})},
                   {{"s2", "s2"}, Straight({"v", "a", "b", "c", "s2"})}});
  EXPECT_EQ(tree.size(), 4u + 5u - 1u - 2u);
  EXPECT_EQ(tree.root().children.size(), 1u);
  EXPECT_EQ(tree.PathTo(tree.suspect_leaves[1]).size(), 5u);
}

TEST(BuildPlotTreeTest, SuspectInsideAnotherPathStaysALeaf) {
  PlotTree tree = BuildPlotTree(
      {"v", "v"}, {{{"s1", "s1"}, Straight({"v", "s1"})},
                   {{"s2", "s2"}, Straight({"v", "s1", "s2"})}});
  EXPECT_NO_THROW(tree.Validate());
  int interior = tree.PathTo(tree.suspect_leaves[1])[1];
  EXPECT_EQ(tree.nodes[interior].entity.iri, "s1");
  EXPECT_LT(tree.nodes[interior].suspect, 0);
  EXPECT_NE(interior, tree.suspect_leaves[0]);
}

TEST(BuildPlotTreeTest, RepeatedSuspectIsACollision) {
  try {
    BuildPlotTree({"v", "v"}, {{{"s", "s"}, Straight({"v", "s"})},
                               {{"s", "s"}, Straight({"v", "a", "s"})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSuspectCollision);
  }
}

// Node count = 1 + sum (len - 1) - merged prefix nodes, where a prefix node
// merges when an earlier path has the same entity and edge at that depth
// along an identical prefix.
size_t ExpectedTreeSize(const std::vector<Path>& paths,
                        const std::set<std::string>& suspects) {
  size_t total = 1;
  for (size_t p = 0; p < paths.size(); ++p) {
    size_t merged = 0;
    for (size_t q = 0; q < p; ++q) {
      size_t k = 0;
      while (k + 2 < paths[p].nodes.size() && k + 2 < paths[q].nodes.size() &&
             paths[p].nodes[k + 1].iri == paths[q].nodes[k + 1].iri &&
             paths[p].edges[k] == paths[q].edges[k] &&
             !suspects.count(paths[p].nodes[k + 1].iri)) {
        ++k;
      }
      merged = std::max(merged, k);
    }
    total += paths[p].nodes.size() - 1 - merged;
  }
  return total;
}

TEST(BuildPlotTreeTest, FixtureTreeSizeMatchesMergeCount) {
  for (uint64_t seed : {1, 2, 3}) {
    GeneratorConfig config = testing::FastConfig(testing::EinsteinFixture(), seed);
    KnowledgeStore store = OpenStore(config);
    EntityRef victim = store.ResolveVictim("Albert Einstein");
    GameDefinition def = testing::EinsteinGame(seed);
    std::vector<std::pair<EntityRef, Path>> paths;
    std::vector<Path> only;
    std::set<std::string> suspects;
    for (const auto& s : def.solution.suspects) suspects.insert(s.iri);
    for (const auto& s : def.solution.suspects) {
      Path major = FindMajorPath(victim, s, store, config.paths);
      EXPECT_LE(major.length(), 5u);
      Path full = ExpandMinorPaths(major, store, config.paths);
      only.push_back(full);
      paths.emplace_back(s, full);
    }
    PlotTree tree = BuildPlotTree(victim, paths);
    EXPECT_EQ(tree.size(), def.world.plot.size());
    EXPECT_EQ(tree.size(), ExpectedTreeSize(only, suspects));
    for (int leaf : tree.suspect_leaves) {
      int major_nodes = 0;
      for (int node : tree.PathTo(leaf)) major_nodes += tree.nodes[node].major;
      EXPECT_LE(major_nodes, 5);
    }
  }
}

}  // namespace
}  // namespace mystery

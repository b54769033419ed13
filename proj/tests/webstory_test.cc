// Copyright 2026 The ldekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ldekit/error.h"
#include "ldekit/graph/serialization.h"
#include "ldekit/webstory/webstory.h"
#include "support/oracles.h"
#include "support/random_models.h"
#include "support/test_util.h"

namespace ldekit::webstory {
namespace {

using graph::Edge;
using graph::GraphModel;
using graph::ModelType;
using graph::Node;

WebStory Fixture() {
  return WebStory::Compile(testing::LoadFixture("treasure_hunt.json"));
}

// The fixture without the key modifier: the hut's click area C leads straight
// back to the start screen.
GraphModel WithoutKey() {
  GraphModel m = testing::LoadFixture("treasure_hunt.json");
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (const Node& n : m.nodes()) {
    if (n.id != "m") nodes.push_back(n);
  }
  for (const Edge& e : m.edges()) {
    if (e.source == "m" || e.target == "m") continue;
    edges.push_back(e);
  }
  edges.push_back({"f05", "controlFlow", "C", "start", {}});
  return GraphModel(m.id(), m.type(), nodes, edges);
}

std::set<std::string> Rules(const GraphModel& m, graph::Severity severity) {
  auto issues = graph::ValidateStructure(m, WebStoryMetamodel());
  if (!graph::HasErrors(issues)) {
    auto more = ValidateWebStory(m);
    issues.insert(issues.end(), more.begin(), more.end());
  }
  std::set<std::string> out;
  for (const auto& i : issues) {
    if (i.severity == severity) out.insert(i.rule_id);
  }
  return out;
}

GraphModel Edit(const GraphModel& m, std::vector<Node> add_nodes,
                std::vector<Edge> add_edges,
                const std::set<std::string>& drop_edges = {}) {
  std::vector<Node> nodes(m.nodes().begin(), m.nodes().end());
  nodes.insert(nodes.end(), add_nodes.begin(), add_nodes.end());
  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) {
    if (!drop_edges.count(e.id)) edges.push_back(e);
  }
  edges.insert(edges.end(), add_edges.begin(), add_edges.end());
  return GraphModel(m.id(), m.type(), nodes, edges);
}

TEST(WebStoryValidationTest, FixtureIsClean) {
  GraphModel m = testing::LoadFixture("treasure_hunt.json");
  EXPECT_TRUE(Rules(m, graph::Severity::kError).empty());
  EXPECT_TRUE(Rules(m, graph::Severity::kWarning).empty());
}

TEST(WebStoryValidationTest, ReportsBrokenStories) {
  GraphModel m = testing::LoadFixture("treasure_hunt.json");
  EXPECT_EQ(Rules(Edit(m, {}, {}, {"f"}), graph::Severity::kError),
            (std::set<std::string>{"condition.branch.missing"}));
  EXPECT_EQ(Rules(Edit(m,
                       {{"m2", "variableModifier", std::nullopt,
                         {{"targetValue", false}}}},
                       {{"x1", "controlFlow", "m2", "m"},
                        {"x2", "dataWrite", "m2", "v"}},
                       {"f06"}),
                  graph::Severity::kError),
            (std::set<std::string>{"modifier.target"}));
  GraphModel cyclic = Edit(
      m, {{"m2", "variableModifier", std::nullopt, {{"targetValue", false}}}},
      {{"x1", "controlFlow", "m2", "m"},
       {"x2", "dataWrite", "m2", "v"},
       {"x3", "controlFlow", "m", "m2"}},
      {"f06"});
  EXPECT_EQ(Rules(cyclic, graph::Severity::kError),
            (std::set<std::string>{"chain.cycle"}));
  EXPECT_EQ(Rules(Edit(m, {}, {{"x1", "controlFlow", "D", "A"}}, {"f07"}),
                  graph::Severity::kError),
            (std::set<std::string>{"edge.endpoint"}));
  EXPECT_EQ(Rules(Edit(m, {{"s2", "startMarker", std::nullopt, {}}},
                       {{"x1", "controlFlow", "s2", "hut"}}),
                  graph::Severity::kError),
            (std::set<std::string>{"start.count"}));
  EXPECT_EQ(Rules(Edit(m,
                       {{"Z", "clickArea", "hut", {{"rect", std::string("1,2,0,4")}}}},
                       {{"x1", "controlFlow", "Z", "start"}}),
                  graph::Severity::kError),
            (std::set<std::string>{"rect.format"}));
  EXPECT_EQ(Rules(Edit(m, {{"lost", "screen", std::nullopt, {}}}, {}),
                  graph::Severity::kWarning),
            (std::set<std::string>{"screen.unreachable"}));
  EXPECT_THROW(WebStory::Compile(Edit(m, {}, {}, {"f"})), Error);
}

TEST(ClickTest, FixturePlay) {
  WebStory story = Fixture();
  GameState s = InitialState(story);
  EXPECT_EQ(s.screen, "start");
  EXPECT_EQ(s.valuation, (std::map<std::string, bool>{{"key", false}}));

  GameState locked = Click(story, s, "B");
  EXPECT_EQ(locked.screen, "message");
  EXPECT_FALSE(locked.valuation.at("key"));

  GameState hut = Click(story, s, "A");
  EXPECT_EQ(hut.screen, "hut");
  EXPECT_EQ(hut.valuation, s.valuation);
  GameState keyed = Click(story, hut, "C");
  EXPECT_EQ(keyed.screen, "start");
  EXPECT_TRUE(keyed.valuation.at("key"));
  GameState won = Click(story, keyed, "B");
  EXPECT_EQ(won.screen, "treasure");
  EXPECT_TRUE(IsFinished(story, won));
  EXPECT_FALSE(IsFinished(story, keyed));
}

TEST(ClickTest, Errors) {
  WebStory story = Fixture();
  GameState s = InitialState(story);
  try {
    Click(story, s, "C");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongScreen);
  }
  try {
    Click(story, s, "hut");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownElement);
  }
}

TEST(KtsTest, FixtureMatchesOracle) {
  WebStory story = Fixture();
  auto kts = DeriveKts(story);
  auto oracle = testing::ExhaustStory(story.model());
  EXPECT_EQ(kts.states.size(), 8u);
  EXPECT_LE(kts.states.size(), 5u * 2u);
  EXPECT_EQ(testing::FromKts(kts).states, oracle.states);
  EXPECT_EQ(testing::FromKts(kts).transitions, oracle.transitions);
  EXPECT_EQ(testing::FromKts(kts).labels, oracle.labels);
  EXPECT_EQ(kts.transitions.size(), oracle.transitions.size());
  EXPECT_EQ(kts.states[0], oracle.initial);
  for (std::size_t i = 0; i < kts.states.size(); ++i) {
    EXPECT_EQ(kts.labels[i].count("var:key") == 1, kts.states[i].valuation.at("key"));
  }
}

TEST(KtsTest, SingleScreen) {
  GraphModel m("one", ModelType::kWebstory,
               {{"only", "screen", std::nullopt, {}},
                {"s", "startMarker", std::nullopt, {}}},
               {{"f", "controlFlow", "s", "only", {}}});
  auto kts = DeriveKts(WebStory::Compile(m));
  EXPECT_EQ(kts.states.size(), 1u);
  EXPECT_TRUE(kts.transitions.empty());
  EXPECT_EQ(kts.labels[0], (std::set<std::string>{"screen:only"}));
}

TEST(ReachabilityTest, TreasureNeedsTheKey) {
  WebStory story = Fixture();
  auto kts = DeriveKts(story);
  auto r = CheckReachability(kts, "screen:treasure");
  ASSERT_TRUE(r.reachable);
  GameState s = InitialState(story);
  std::vector<std::string> clicks;
  for (const auto& [state, area] : r.witness) {
    EXPECT_EQ(kts.states[state], s);
    s = Click(story, s, area);
    clicks.push_back(area);
  }
  EXPECT_EQ(s.screen, "treasure");
  EXPECT_EQ(clicks, (std::vector<std::string>{"A", "C", "B"}));

  auto here = CheckReachability(kts, "screen:start");
  EXPECT_TRUE(here.reachable);
  EXPECT_TRUE(here.witness.empty());

  try {
    CheckReachability(kts, "screen:atlantis");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownProposition);
  }

  GraphModel no_key = WithoutKey();
  auto locked = DeriveKts(WebStory::Compile(no_key));
  EXPECT_FALSE(CheckReachability(locked, "screen:treasure").reachable);
  EXPECT_FALSE(CheckReachability(locked, "var:key").reachable);
  auto oracle = testing::ExhaustStory(no_key);
  for (const auto& s2 : oracle.states) EXPECT_NE(s2.screen, "treasure");
}

TEST(SiteTest, FixtureSite) {
  WebStory story = Fixture();
  auto files = GenerateSite(story, testing::DataPath("story_assets"));
  std::vector<std::string> paths;
  for (const auto& f : files) paths.push_back(f.path);
  EXPECT_EQ(paths, (std::vector<std::string>{
                       "assets/cave.png", "assets/hut.png", "assets/message.png",
                       "assets/start.png", "assets/treasure.png", "index.html",
                       "model.json", "runtime.js", "style.css"}));
  auto find = [&](const std::string& p) {
    return std::find_if(files.begin(), files.end(),
                        [&](const SiteFile& f) { return f.path == p; })->content;
  };
  EXPECT_EQ(find("model.json"), graph::SaveModel(story.model()));
  EXPECT_EQ(find("assets/hut.png"),
            testing::ReadFile(testing::DataPath("story_assets/hut.png")));
  const std::string& index = find("index.html");
  EXPECT_NE(index.find("<script src=\"runtime.js\"></script>"), std::string::npos);
  EXPECT_EQ(index.find("http"), std::string::npos);
  EXPECT_EQ(find("runtime.js").find("fetch("), std::string::npos);

  auto again = GenerateSite(story, testing::DataPath("story_assets"));
  ASSERT_EQ(again.size(), files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    EXPECT_EQ(again[i].path, files[i].path);
    EXPECT_EQ(again[i].content, files[i].content);
  }
}

TEST(SiteTest, OneScreenManifestAndEscaping) {
  GraphModel m("</script><b>", ModelType::kWebstory,
               {{"only", "screen", std::nullopt,
                 {{"backgroundImage", std::string("start.png")},
                  {"name", std::string("</script>")}}},
                {"s", "startMarker", std::nullopt, {}}},
               {{"f", "controlFlow", "s", "only", {}}});
  auto files = GenerateSite(WebStory::Compile(m), testing::DataPath("story_assets"));
  EXPECT_EQ(files.size(), 5u);
  const std::string& index = files[1].content;
  EXPECT_EQ(files[1].path, "index.html");
  EXPECT_EQ(index.find("</script><b>"), std::string::npos);
  auto begin = index.find("id=\"model\">") + 11;
  auto end = index.find("</script>", begin);
  EXPECT_EQ(nlohmann::json::parse(index.substr(begin, end - begin)),
            nlohmann::json::parse(graph::SaveModel(m)));
}

TEST(SiteTest, MissingAsset) {
  for (const char* image : {"nowhere.png", "../story_assets/hut.png", "/etc/passwd"}) {
    GraphModel m("x", ModelType::kWebstory,
                 {{"only", "screen", std::nullopt,
                   {{"backgroundImage", std::string(image)}}},
                  {"s", "startMarker", std::nullopt, {}}},
                 {{"f", "controlFlow", "s", "only", {}}});
    try {
      GenerateSite(WebStory::Compile(m), testing::DataPath("story_assets"));
      FAIL() << image;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMissingAsset);
    }
  }
}

nlohmann::json StateJson(const WebStory& story, const GameState& s) {
  nlohmann::json v = nlohmann::json::object();
  for (const auto& [k, b] : s.valuation) v[k] = b;
  return {{"screen", s.screen}, {"valuation", v}, {"finished", IsFinished(story, s)}};
}

// Headless run of the generated runtime against Click.
TEST(SiteTest, RuntimeStepMatchesClick) {
  std::string node = testing::FindNode();
  if (node.empty()) GTEST_SKIP() << "node not installed";
  WebStory story = Fixture();
  testing::TempDir dir;
  for (const auto& f : GenerateSite(story, testing::DataPath("story_assets"))) {
    testing::WriteFile(dir.path() / f.path, f.content);
  }
  testing::WriteFile(dir.path() / "drive.js", R"JS(
const fs = require('fs');
const rt = require('./runtime.js');
const model = fs.readFileSync(__dirname + '/model.json', 'utf8');
let state = rt.initialState(model);
console.log(state);
for (const id of process.argv.slice(2)) {
  state = rt.step(model, state, id);
  console.log(state);
}
)JS");
  const std::vector<std::string> clicks = {"B", "E", "G", "F", "A", "C", "A",
                                           "D", "B"};
  std::string cmd = node + " " + (dir.path() / "drive.js").string();
  for (const auto& c : clicks) cmd += " " + c;
  std::string out;
  ASSERT_EQ(testing::RunCommand(cmd, &out), 0) << out;

  std::vector<nlohmann::json> lines;
  std::size_t pos = 0;
  while (pos < out.size()) {
    auto nl = out.find('\n', pos);
    lines.push_back(nlohmann::json::parse(out.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  ASSERT_EQ(lines.size(), clicks.size() + 1);
  GameState s = InitialState(story);
  EXPECT_EQ(lines[0], StateJson(story, s));
  for (std::size_t i = 0; i < clicks.size(); ++i) {
    s = Click(story, s, clicks[i]);
    EXPECT_EQ(lines[i + 1], StateJson(story, s)) << "after " << clicks[i];
  }
  EXPECT_EQ(s.screen, "treasure");
}

TEST(WebStoryPropertyTest, RandomStoriesMatchOracle) {
  testing::Rng rng(404);
  for (int round = 0; round < 200; ++round) {
    GraphModel m = testing::RandomStory(rng);
    WebStory story = WebStory::Compile(m);
    auto kts = DeriveKts(story);
    auto oracle = testing::ExhaustStory(m);
    auto mine = testing::FromKts(kts);
    ASSERT_EQ(mine.states, oracle.states) << graph::SaveModel(m);
    ASSERT_EQ(mine.transitions, oracle.transitions);
    ASSERT_EQ(mine.labels, oracle.labels);
    ASSERT_EQ(mine.initial, oracle.initial);
    ASSERT_EQ(kts.states.size(), mine.states.size());
    ASSERT_EQ(kts.transitions.size(), mine.transitions.size());

    for (const auto& goal : kts.propositions) {
      bool expected = std::any_of(
          oracle.labels.begin(), oracle.labels.end(),
          [&](const auto& entry) { return entry.second.count(goal) > 0; });
      auto r = CheckReachability(kts, goal);
      ASSERT_EQ(r.reachable, expected) << goal;
      if (!r.reachable) continue;
      GameState s = InitialState(story);
      for (const auto& step : r.witness) s = Click(story, s, step.second);
      ASSERT_EQ(s, kts.states[r.goal_state]);
      ASSERT_TRUE(kts.labels[r.goal_state].count(goal));
    }
  }
}

}  // namespace
}  // namespace ldekit::webstory

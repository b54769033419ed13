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

#include <sstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "ldekit/error.h"
#include "ldekit/service/service.h"
#include "support/test_util.h"

namespace ldekit::service {
namespace {

namespace fs = std::filesystem;

statechart::Statechart Coffee() {
  return statechart::Statechart::Compile(testing::LoadFixture("coffee_machine.json"));
}

std::string Repl(const std::string& script) {
  std::istringstream in(script);
  std::ostringstream out;
  RunRepl(Coffee(), in, out);
  return out.str();
}

// Every line printed by "dump", parsed.
std::vector<Json> Dumps(const std::string& output) {
  std::vector<Json> dumps;
  std::istringstream lines(output);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.front() == '{') dumps.push_back(Json::parse(line));
  }
  return dumps;
}

// A model directory with the fixtures plus a broken file and a duplicate.
class ModelDir {
 public:
  ModelDir() {
    for (const char* name :
         {"coffee_machine.json", "treasure_hunt.json", "dime_pipeline.json"}) {
      testing::WriteFile(dir_.path() / name,
                         testing::ReadFile(testing::DataPath(name)));
    }
    testing::WriteFile(dir_.path() / "broken.json", "{ nope");
    testing::WriteFile(dir_.path() / "zz_copy.json",
                       testing::ReadFile(testing::DataPath("coffee_machine.json")));
    testing::WriteFile(dir_.path() / "notes.txt", "ignored");
  }
  const fs::path& path() const { return dir_.path(); }

 private:
  testing::TempDir dir_;
};

TEST(ServiceJson, ConfigurationShape) {
  auto chart = Coffee();
  Json j = ConfigurationToJson(statechart::InitConfiguration(chart));
  EXPECT_EQ(j.dump(),
            R"({"activeStates":["Off"],"variables":{"beans":2,"cups":0},)"
            R"("history":{},"terminated":false})");
}

TEST(ServiceJson, GameStateShape) {
  auto story = webstory::WebStory::Compile(testing::LoadFixture("treasure_hunt.json"));
  Json j = GameStateToJson(story, webstory::InitialState(story));
  EXPECT_EQ(j["screen"], "start");
  EXPECT_EQ(j["valuation"], Json({{"key", false}}));
  EXPECT_EQ(j["clickAreas"], Json({"A", "B", "G"}));
  EXPECT_EQ(j["finished"], false);
}

TEST(ServiceRepl, StopPausesTheMachine) {
  std::string out = Repl("fire PowerOn\nfire Stop\nquit\nfire Resume\n");
  EXPECT_NE(out.find("fired Stop: t03\nactive: Paused\n"), std::string::npos);
  EXPECT_EQ(out.find("Resume"), std::string::npos);  // nothing after quit
}

TEST(ServiceRepl, UnknownTriggerLeavesStateAlone) {
  std::string out = Repl("fire PowerOn\ndump\nfire nosuch\ndump\n");
  EXPECT_NE(out.find("unknown trigger 'nosuch'"), std::string::npos);
  auto dumps = Dumps(out);
  ASSERT_EQ(dumps.size(), 2u);
  EXPECT_EQ(dumps[0], dumps[1]);
}

TEST(ServiceRepl, VariableTable) {
  std::string out = Repl("vars\nfoo\n");
  EXPECT_NE(out.find("variables:\n  beans = 2\n  cups = 0\n"), std::string::npos);
  EXPECT_NE(out.find("unknown command"), std::string::npos);
}

TEST(ServiceCatalog, LoadsSortedAndReportsSkipped) {
  ModelDir dir;
  ModelCatalog catalog = ModelCatalog::Load(dir.path());
  std::vector<std::string> ids;
  for (const auto& [id, entry] : catalog.entries()) ids.push_back(id);
  EXPECT_EQ(ids, (std::vector<std::string>{"coffee_machine", "dime_pipeline",
                                           "treasure_hunt"}));
  ASSERT_EQ(catalog.skipped().size(), 2u);
  EXPECT_EQ(catalog.skipped()[0].rfind("broken.json", 0), 0u);
  EXPECT_EQ(catalog.skipped()[1].rfind("zz_copy.json", 0), 0u);
  EXPECT_THROW(ModelCatalog::Load(dir.path() / "missing"), Error);
}

TEST(ServiceApi, StatechartSessionLifecycle) {
  ModelDir dir;
  SessionService api(ModelCatalog::Load(dir.path()));

  ApiResponse models = api.ListModels();
  EXPECT_EQ(models.status, 200);
  ASSERT_EQ(models.body["models"].size(), 3u);
  EXPECT_EQ(models.body["models"][0]["id"], "coffee_machine");
  EXPECT_EQ(models.body["models"][1]["simulatable"], false);

  EXPECT_EQ(api.CreateSession("statechart", "nosuch").status, 404);
  EXPECT_EQ(api.CreateSession("webstory", "coffee_machine").status, 404);
  EXPECT_EQ(api.CreateSession("pipeline", "dime_pipeline").status, 404);

  ApiResponse created = api.CreateSession("statechart", "coffee_machine");
  ASSERT_EQ(created.status, 201);
  EXPECT_EQ(created.body["sessionId"], "s1");
  EXPECT_EQ(created.body["state"]["activeStates"], Json({"Off"}));
  EXPECT_EQ(created.body["triggers"].size(), 9u);

  EXPECT_EQ(api.Fire("s1", "not json").status, 400);
  EXPECT_EQ(api.Fire("s1", R"({"trigger": 3})").status, 400);
  EXPECT_EQ(api.Fire("s9", R"({"trigger": "Stop"})").status, 404);
  ApiResponse unknown = api.Fire("s1", R"({"trigger": "nosuch"})");
  EXPECT_EQ(unknown.status, 400);
  EXPECT_EQ(unknown.body["error"], "UnknownTrigger");
  EXPECT_EQ(api.Click("s1", R"({"clickArea": "A"})").status, 400);

  ApiResponse on = api.Fire("s1", R"({"trigger": "PowerOn"})");
  ASSERT_EQ(on.status, 200);
  EXPECT_EQ(on.body["state"]["activeStates"], Json({"Idle", "On"}));
  EXPECT_EQ(on.body["event"]["takenTransitions"], Json({"t02", "t07"}));
  EXPECT_EQ(api.Fire("s1", R"({"trigger": "Shutdown"})").status, 200);
  EXPECT_EQ(api.Fire("s1", R"({"trigger": "PowerOff"})").status, 200);
  EXPECT_EQ(api.GetSession("s1").body["state"]["terminated"], true);
  EXPECT_EQ(api.Fire("s1", R"({"trigger": "PowerOn"})").status, 409);

  ApiResponse log = api.GetLog("s1");
  ASSERT_EQ(log.body["log"].size(), 3u);
  EXPECT_EQ(log.body["log"][2]["trigger"], "PowerOff");
  EXPECT_EQ(api.GetLog("nope").status, 404);
}

TEST(ServiceApi, ReplayingALogReproducesTheState) {
  ModelDir dir;
  Json log, final_state;
  {
    SessionService api(ModelCatalog::Load(dir.path()));
    api.CreateSession("statechart", "coffee_machine");
    for (const char* t : {"PowerOn", "Brew", "Stop", "Resume", "Heated"}) {
      api.Fire("s1", Json{{"trigger", t}}.dump());
    }
    log = api.GetLog("s1").body["log"];
    final_state = api.GetSession("s1").body["state"];
  }
  SessionService restarted(ModelCatalog::Load(dir.path()));
  restarted.CreateSession("statechart", "coffee_machine");
  for (const Json& entry : log) {
    restarted.Fire("s1", Json{{"trigger", entry["trigger"]}}.dump());
  }
  EXPECT_EQ(restarted.GetSession("s1").body["state"], final_state);
  EXPECT_EQ(restarted.GetLog("s1").body["log"], log);
}

TEST(ServiceApi, WebStoryPlayThrough) {
  ModelDir dir;
  SessionService api(ModelCatalog::Load(dir.path()));
  ASSERT_EQ(api.CreateSession("webstory", "treasure_hunt").status, 201);
  EXPECT_EQ(api.Fire("s1", R"({"trigger": "Stop"})").status, 400);
  EXPECT_EQ(api.Click("s1", R"({"clickArea": "C"})").body["error"], "WrongScreen");
  EXPECT_EQ(api.Click("s1", R"({"clickArea": "nope"})").body["error"],
            "UnknownElement");
  Json state;
  for (const char* area : {"A", "C", "B"}) {
    ApiResponse r = api.Click("s1", Json{{"clickArea", area}}.dump());
    ASSERT_EQ(r.status, 200) << area;
    state = r.body["state"];
  }
  EXPECT_EQ(state["screen"], "treasure");
  EXPECT_EQ(state["finished"], true);
  EXPECT_EQ(api.GetLog("s1").body["log"].size(), 3u);
}

TEST(ServiceApi, ParallelSessionsStayConsistent) {
  ModelDir dir;
  SessionService api(ModelCatalog::Load(dir.path()));
  constexpr int kSessions = 4;
  for (int i = 0; i < kSessions; ++i) api.CreateSession("statechart", "coffee_machine");
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&api, t] {
      std::string id = "s" + std::to_string(t % kSessions + 1);
      for (int k = 0; k < 50; ++k) {
        api.Fire(id, R"({"trigger": "Brew"})");
        api.GetSession(id);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int i = 1; i <= kSessions; ++i) {
    EXPECT_EQ(api.GetLog("s" + std::to_string(i)).body["log"].size(), 100u);
  }
}

// Runs the REPL and the HTTP API over a real socket on the same triggers.
TEST(ServiceHttp, MatchesTheRepl) {
  ModelDir dir;
  testing::WriteFile(dir.path() / "ui" / "index.html", "<p>ui</p>");
  SessionService api(ModelCatalog::Load(dir.path()));
  HttpServer server(api, dir.path() / "ui");
  int port = server.Bind("127.0.0.1", 0);
  std::thread runner([&server] { server.Run(); });
  httplib::Client client("127.0.0.1", port);

  const std::vector<std::vector<std::string>> sequences = {
      {"PowerOn", "Stop", "Resume"},
      {"PowerOn", "Brew", "Heated", "Ground", "Brew", "Stop", "Resume", "Ground"},
      {"PowerOn", "Refill", "Shutdown", "PowerOff", "PowerOn"},
  };
  for (const auto& seq : sequences) {
    std::string script;
    for (const auto& t : seq) script += "fire " + t + "\ndump\n";
    auto dumps = Dumps(Repl(script));
    ASSERT_EQ(dumps.size(), seq.size());

    auto created = client.Post("/api/statechart/coffee_machine/sessions", "",
                               "application/json");
    ASSERT_TRUE(created);
    ASSERT_EQ(created->status, 201);
    std::string id = Json::parse(created->body)["sessionId"];
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto fired = client.Post("/api/sessions/" + id + "/fire",
                               Json{{"trigger", seq[i]}}.dump(), "application/json");
      ASSERT_TRUE(fired);
      Json state;
      if (fired->status == 409) {
        state = Json::parse(client.Get("/api/sessions/" + id)->body)["state"];
      } else {
        ASSERT_EQ(fired->status, 200);
        state = Json::parse(fired->body)["state"];
      }
      EXPECT_EQ(state, dumps[i]) << seq[i];
    }
  }

  auto models = client.Get("/api/models");
  ASSERT_TRUE(models);
  EXPECT_EQ(Json::parse(models->body)["models"].size(), 3u);
  EXPECT_EQ(client.Get("/api/sessions/s99")->status, 404);
  EXPECT_EQ(client.Post("/api/dataflow/x/sessions", "", "application/json")->status,
            404);
  auto ui = client.Get("/index.html");
  ASSERT_TRUE(ui);
  EXPECT_EQ(ui->body, "<p>ui</p>");

  server.Stop();
  runner.join();
}

}  // namespace
}  // namespace ldekit::service

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

#ifndef LDEKIT_SERVICE_SERVICE_H_
#define LDEKIT_SERVICE_SERVICE_H_

#include <atomic>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ldekit/graph/graph_model.h"
#include "ldekit/statechart/statechart.h"
#include "ldekit/webstory/webstory.h"

namespace httplib {
class Server;
}

namespace ldekit::service {

using Json = nlohmann::ordered_json;

// {"activeStates": [...], "variables": {...}, "history": {...},
//  "terminated": bool}
Json ConfigurationToJson(const statechart::Configuration& config);
// {"trigger", "takenTransitions", "executedActions", "completions"}
Json EventToJson(const statechart::SimulationEvent& event);
// {"screen", "valuation": {...}, "finished": bool}
Json GameStateToJson(const webstory::WebStory& story,
                     const webstory::GameState& state);

// Line-oriented simulator: fire <trigger>, vars, dump, help, quit. Prints the
// configuration after init and after every fire. Returns at quit or end of
// input.
void RunRepl(const statechart::Statechart& chart, std::istream& in,
             std::ostream& out);

struct CatalogEntry {
  std::string id;
  graph::ModelType type;
  std::filesystem::path path;
  std::optional<statechart::Statechart> chart;
  std::optional<webstory::WebStory> story;
  std::string error;  // compile error for statecharts and stories
};

// Every *.json model directly inside a directory, keyed by model id. Files
// that fail to load and later duplicates of an id are skipped and listed in
// skipped().
class ModelCatalog {
 public:
  static ModelCatalog Load(const std::filesystem::path& dir);

  const std::map<std::string, CatalogEntry, std::less<>>& entries() const {
    return entries_;
  }
  const CatalogEntry* Find(std::string_view id) const;
  const std::vector<std::string>& skipped() const { return skipped_; }

 private:
  std::map<std::string, CatalogEntry, std::less<>> entries_;
  std::vector<std::string> skipped_;
};

struct ApiResponse {
  int status = 200;
  Json body;
};

// The HTTP API without the transport. Sessions live in memory; calls on one
// session are serialized, different sessions run in parallel.
class SessionService {
 public:
  explicit SessionService(ModelCatalog catalog);
  ~SessionService();

  ApiResponse ListModels() const;
  // kind is "statechart" or "webstory".
  ApiResponse CreateSession(std::string_view kind, std::string_view model_id);
  ApiResponse GetSession(std::string_view session_id);
  // Body {"trigger": "..."}.
  ApiResponse Fire(std::string_view session_id, std::string_view body);
  // Body {"clickArea": "..."}.
  ApiResponse Click(std::string_view session_id, std::string_view body);
  ApiResponse GetLog(std::string_view session_id);

 private:
  struct Session;

  std::shared_ptr<Session> FindSession(std::string_view id) const;

  ModelCatalog catalog_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::atomic<std::size_t> next_id_{1};
};

// Routes the API under /api and, when ui_dir is set, serves it at /.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service,
                      std::optional<std::filesystem::path> ui_dir = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws Error(kIo).
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  void Run();
  void Stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace ldekit::service

#endif  // LDEKIT_SERVICE_SERVICE_H_

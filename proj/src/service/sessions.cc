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
#include <variant>

#include "ldekit/error.h"
#include "ldekit/graph/serialization.h"
#include "ldekit/service/service.h"

namespace ldekit::service {

namespace fs = std::filesystem;

ModelCatalog ModelCatalog::Load(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo, "'" + dir.string() + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  ModelCatalog catalog;
  for (const fs::path& file : files) {
    std::optional<graph::GraphModel> model;
    try {
      model = graph::LoadModelFile(file);
    } catch (const Error& e) {
      catalog.skipped_.push_back(file.filename().string() + ": " + e.what());
      continue;
    }
    if (catalog.entries_.count(model->id()) != 0) {
      catalog.skipped_.push_back(file.filename().string() + ": duplicate model id '" +
                                 model->id() + "'");
      continue;
    }
    CatalogEntry entry{model->id(), model->type(), file, {}, {}, {}};
    try {
      if (model->type() == graph::ModelType::kStatechart) {
        entry.chart = statechart::Statechart::Compile(*model);
      } else if (model->type() == graph::ModelType::kWebstory) {
        entry.story = webstory::WebStory::Compile(*model);
      }
    } catch (const Error& e) {
      entry.error = e.what();
    }
    catalog.entries_.emplace(entry.id, std::move(entry));
  }
  return catalog;
}

const CatalogEntry* ModelCatalog::Find(std::string_view id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

struct SessionService::Session {
  std::string id;
  std::string model_id;
  std::mutex mutex;
  std::optional<statechart::Statechart> chart;
  std::optional<webstory::WebStory> story;
  statechart::Configuration config;
  webstory::GameState game;
  Json log = Json::array();

  Json State() const {
    return chart ? ConfigurationToJson(config) : GameStateToJson(*story, game);
  }

  Json Describe() const {
    Json body{{"sessionId", id},
              {"modelId", model_id},
              {"kind", chart ? "statechart" : "webstory"}};
    if (chart) {
      body["triggers"] = std::vector<std::string>(chart->triggers().begin(),
                                                  chart->triggers().end());
    }
    body["state"] = State();
    return body;
  }
};

namespace {

ApiResponse Fail(int status, std::string_view code, const std::string& message) {
  return {status, Json{{"error", code}, {"message", message}}};
}

ApiResponse Fail(int status, const Error& e) {
  return Fail(status, ErrorCodeName(e.code()), e.what());
}

ApiResponse NoSession(std::string_view id) {
  return Fail(404, "NotFound", "no session '" + std::string(id) + "'");
}

// Reads one string member of a JSON object body.
std::optional<std::string> StringMember(std::string_view body,
                                        const char* key) {
  Json doc = Json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

SessionService::SessionService(ModelCatalog catalog)
    : catalog_(std::move(catalog)) {}

SessionService::~SessionService() = default;

ApiResponse SessionService::ListModels() const {
  Json models = Json::array();
  for (const auto& [id, entry] : catalog_.entries()) {
    Json m{{"id", id},
           {"modelType", graph::ModelTypeName(entry.type)},
           {"file", entry.path.filename().string()}};
    if (entry.type == graph::ModelType::kStatechart ||
        entry.type == graph::ModelType::kWebstory) {
      m["simulatable"] = entry.error.empty();
      if (!entry.error.empty()) m["error"] = entry.error;
    } else {
      m["simulatable"] = false;
    }
    models.push_back(std::move(m));
  }
  return {200, Json{{"models", models}}};
}

std::shared_ptr<SessionService::Session> SessionService::FindSession(
    std::string_view id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse SessionService::CreateSession(std::string_view kind,
                                          std::string_view model_id) {
  const CatalogEntry* entry = catalog_.Find(model_id);
  const bool want_chart = kind == "statechart";
  if (entry == nullptr || (kind != "statechart" && kind != "webstory") ||
      entry->type != (want_chart ? graph::ModelType::kStatechart
                                 : graph::ModelType::kWebstory)) {
    return Fail(404, "NotFound",
                "no " + std::string(kind) + " model '" + std::string(model_id) + "'");
  }
  if (!entry->error.empty()) {
    return Fail(422, "InvalidModel", entry->error);
  }
  auto session = std::make_shared<Session>();
  session->model_id = entry->id;
  try {
    if (want_chart) {
      session->chart = entry->chart;
      session->config = statechart::InitConfiguration(*entry->chart);
    } else {
      session->story = entry->story;
      session->game = webstory::InitialState(*entry->story);
    }
  } catch (const Error& e) {
    return Fail(422, e);
  }
  session->id = "s" + std::to_string(next_id_++);
  {
    std::unique_lock lock(sessions_mutex_);
    sessions_[session->id] = session;
  }
  return {201, session->Describe()};
}

ApiResponse SessionService::GetSession(std::string_view session_id) {
  auto session = FindSession(session_id);
  if (!session) return NoSession(session_id);
  std::lock_guard lock(session->mutex);
  return {200, session->Describe()};
}

ApiResponse SessionService::Fire(std::string_view session_id,
                                 std::string_view body) {
  auto session = FindSession(session_id);
  if (!session) return NoSession(session_id);
  std::optional<std::string> trigger = StringMember(body, "trigger");
  if (!trigger) {
    return Fail(400, "BadRequest", "expected a JSON body {\"trigger\": \"...\"}");
  }
  std::lock_guard lock(session->mutex);
  if (!session->chart) {
    return Fail(400, "BadRequest", "session " + session->id + " is not a statechart");
  }
  if (session->config.terminated) {
    return Fail(409, "Terminated", "statechart has terminated");
  }
  try {
    auto [next, event] =
        statechart::FireTrigger(*session->chart, session->config, *trigger);
    session->config = std::move(next);
    Json record = EventToJson(event);
    session->log.push_back(record);
    return {200, Json{{"state", session->State()}, {"event", record}}};
  } catch (const Error& e) {
    return Fail(e.code() == ErrorCode::kUnknownTrigger ? 400 : 422, e);
  }
}

ApiResponse SessionService::Click(std::string_view session_id,
                                  std::string_view body) {
  auto session = FindSession(session_id);
  if (!session) return NoSession(session_id);
  std::optional<std::string> area = StringMember(body, "clickArea");
  if (!area) {
    return Fail(400, "BadRequest", "expected a JSON body {\"clickArea\": \"...\"}");
  }
  std::lock_guard lock(session->mutex);
  if (!session->story) {
    return Fail(400, "BadRequest", "session " + session->id + " is not a webstory");
  }
  try {
    session->game = webstory::Click(*session->story, session->game, *area);
    Json record{{"clickArea", *area}, {"screen", session->game.screen}};
    session->log.push_back(record);
    return {200, Json{{"state", session->State()}}};
  } catch (const Error& e) {
    return Fail(400, e);
  }
}

ApiResponse SessionService::GetLog(std::string_view session_id) {
  auto session = FindSession(session_id);
  if (!session) return NoSession(session_id);
  std::lock_guard lock(session->mutex);
  return {200, Json{{"sessionId", session->id}, {"log", session->log}}};
}

}  // namespace ldekit::service

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

#include <httplib.h>

#include "ldekit/error.h"
#include "ldekit/service/service.h"

namespace ldekit::service {

namespace {

void Reply(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(SessionService& service,
                       std::optional<std::filesystem::path> ui_dir)
    : server_(std::make_unique<httplib::Server>()) {
  httplib::Server& s = *server_;
  s.Get("/api/models", [&service](const httplib::Request&, httplib::Response& res) {
    Reply(res, service.ListModels());
  });
  s.Post(R"(/api/(statechart|webstory)/([^/]+)/sessions)",
         [&service](const httplib::Request& req, httplib::Response& res) {
           Reply(res, service.CreateSession(req.matches[1].str(),
                                            req.matches[2].str()));
         });
  s.Get(R"(/api/sessions/([^/]+))",
        [&service](const httplib::Request& req, httplib::Response& res) {
          Reply(res, service.GetSession(req.matches[1].str()));
        });
  s.Post(R"(/api/sessions/([^/]+)/fire)",
         [&service](const httplib::Request& req, httplib::Response& res) {
           Reply(res, service.Fire(req.matches[1].str(), req.body));
         });
  s.Post(R"(/api/sessions/([^/]+)/click)",
         [&service](const httplib::Request& req, httplib::Response& res) {
           Reply(res, service.Click(req.matches[1].str(), req.body));
         });
  s.Get(R"(/api/sessions/([^/]+)/log)",
        [&service](const httplib::Request& req, httplib::Response& res) {
          Reply(res, service.GetLog(req.matches[1].str()));
        });
  if (ui_dir) s.set_mount_point("/", ui_dir->string());
  s.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.status == 404 && req.path.rfind("/api/", 0) == 0 &&
        res.body.empty()) {
      res.set_content(Json{{"error", "NotFound"},
                           {"message", "no route " + req.method + " " + req.path}}
                          .dump(),
                      "application/json");
    }
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::Bind(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host)
                        : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error(ErrorCode::kIo, "cannot listen on " + host + ":" +
                                    std::to_string(port));
  }
  return bound;
}

void HttpServer::Run() { server_->listen_after_bind(); }

void HttpServer::Stop() { server_->stop(); }

}  // namespace ldekit::service

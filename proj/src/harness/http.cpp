// Copyright 2026 The Clarith Authors
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

#include "httplib.h"

#include "clarith/harness.hpp"

namespace clarith {

bool serve_http(PlayServer& server, const std::string& host, int port) {
  httplib::Server http;
  auto route = [&server](const httplib::Request& req, httplib::Response& res) {
    PlayServer::Response r = server.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  const char* pattern = R"(/sessions(/.*)?)";
  http.Get(pattern, route);
  http.Post(pattern, route);
  http.Delete(pattern, route);
  http.Options(pattern, [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  return http.listen(host, port);
}

}  // namespace clarith

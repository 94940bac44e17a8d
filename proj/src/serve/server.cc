// Copyright 2026 The Newsalyze Authors.
//
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

#include "newsalyze/serve/server.h"

#include <sys/socket.h>

#include <algorithm>
#include <vector>

#include "httplib.h"
#include "newsalyze/base/errors.h"
#include "newsalyze/base/hash.h"

namespace newsalyze {

namespace fs = std::filesystem;

std::string StoreFingerprint(const fs::path &store_root) {
  std::vector<std::string> lines;
  std::error_code ec;
  fs::path topics = store_root / "topics";
  if (!fs::is_directory(topics, ec)) return "";
  for (auto it = fs::recursive_directory_iterator(topics, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    auto size = it->file_size(ec);
    auto mtime = it->last_write_time(ec).time_since_epoch().count();
    lines.push_back(it->path().string() + "|" + std::to_string(size) + "|" +
                    std::to_string(mtime));
  }
  std::sort(lines.begin(), lines.end());
  std::string joined;
  for (const std::string &line : lines) joined += line + "\n";
  return Sha256Hex(joined);
}

namespace {

bool IsLoopback(const std::string &address) {
  return address == "127.0.0.1" || address == "::1" ||
         address == "::ffff:127.0.0.1";
}

void SetJson(httplib::Response &res, const ApiResponse &api) {
  res.status = api.status;
  res.set_content(api.body, "application/json; charset=utf-8");
}

}  // namespace

ApiServer::ApiServer(ServerOptions options)
    : options_(std::move(options)),
      store_(options_.store_root),
      http_(std::make_unique<httplib::Server>()) {
  InstallRoutes();
}

ApiServer::~ApiServer() { Stop(); }

std::shared_ptr<const Snapshot> ApiServer::snapshot() const {
  std::lock_guard<std::mutex> lock(snapshot_mutex_);
  return snapshot_;
}

bool ApiServer::Reload(std::string *error) {
  try {
    std::string fingerprint = StoreFingerprint(options_.store_root);
    std::shared_ptr<const Snapshot> fresh = Snapshot::Load(store_);
    std::lock_guard<std::mutex> lock(snapshot_mutex_);
    snapshot_ = std::move(fresh);
    fingerprint_ = std::move(fingerprint);
    return true;
  } catch (const std::exception &e) {
    if (error != nullptr) *error = e.what();
    return false;
  }
}

void ApiServer::InstallRoutes() {
  // httplib's default sets SO_REUSEPORT, which lets a second server share a
  // port that is already taken. Only allow quick rebinding after a restart.
  http_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  if (!options_.cors_origin.empty()) {
    http_->set_post_routing_handler(
        [origin = options_.cors_origin](const httplib::Request &,
                                        httplib::Response &res) {
          res.set_header("Access-Control-Allow-Origin", origin);
          res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
          res.set_header("Access-Control-Allow-Headers", "Content-Type");
        });
    http_->Options(R"(/api/.*)",
                   [](const httplib::Request &, httplib::Response &res) {
                     res.status = 204;
                   });
  }
  if (!options_.static_dir.empty()) {
    if (!http_->set_mount_point("/", options_.static_dir.string())) {
      throw Error(ErrorCode::kIo, "static directory not found: " +
                                      options_.static_dir.string());
    }
  }
  http_->Get(R"(/api/.*)",
             [this](const httplib::Request &req, httplib::Response &res) {
               SetJson(res, RouteGet(*snapshot(), req.path));
             });
  http_->Post("/api/reload",
              [this](const httplib::Request &req, httplib::Response &res) {
                if (!IsLoopback(req.remote_addr)) {
                  SetJson(res, {403, DumpJson(ErrorPayload(
                                         "forbidden", "reload_is_local_only"))});
                  return;
                }
                std::string error;
                if (Reload(&error)) {
                  SetJson(res, {200, DumpJson(Json{{"reloaded", true}})});
                } else {
                  SetJson(res, {500, DumpJson(ErrorPayload("reload_failed",
                                                           error))});
                }
              });
}

int ApiServer::Bind() {
  std::string error;
  if (!Reload(&error)) throw Error(ErrorCode::kIo, "cannot load store: " + error);
  int port = options_.port;
  if (port == 0) {
    port = http_->bind_to_any_port(options_.host);
    if (port < 0) throw Error(ErrorCode::kIo, "cannot bind " + options_.host);
  } else if (!http_->bind_to_port(options_.host, port)) {
    throw Error(ErrorCode::kIo, "cannot bind " + options_.host + ":" +
                                    std::to_string(port));
  }
  if (options_.watch_interval.count() > 0) {
    watch_thread_ = std::thread([this] { WatchLoop(); });
  }
  return port;
}

void ApiServer::Serve() { http_->listen_after_bind(); }

int ApiServer::Start() {
  int port = Bind();
  serve_thread_ = std::thread([this] { Serve(); });
  http_->wait_until_ready();
  return port;
}

void ApiServer::Stop() {
  {
    std::lock_guard<std::mutex> lock(watch_mutex_);
    stopping_ = true;
  }
  watch_cv_.notify_all();
  http_->stop();
  if (serve_thread_.joinable()) serve_thread_.join();
  if (watch_thread_.joinable()) watch_thread_.join();
}

void ApiServer::WatchLoop() {
  std::unique_lock<std::mutex> lock(watch_mutex_);
  while (!stopping_) {
    watch_cv_.wait_for(lock, options_.watch_interval);
    if (stopping_) break;
    std::string current = StoreFingerprint(options_.store_root);
    bool changed;
    {
      std::lock_guard<std::mutex> snapshot_lock(snapshot_mutex_);
      changed = current != fingerprint_;
    }
    if (changed) Reload();
  }
}

}  // namespace newsalyze

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

#ifndef NEWSALYZE_SERVE_SERVER_H_
#define NEWSALYZE_SERVE_SERVER_H_

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "newsalyze/serve/api.h"
#include "newsalyze/store/store.h"

namespace httplib {
class Server;
}

namespace newsalyze {

struct ServerOptions {
  std::filesystem::path store_root;
  std::string host = "127.0.0.1";
  // 0 picks a free port.
  int port = 8080;
  // Value of Access-Control-Allow-Origin; empty disables CORS headers.
  std::string cors_origin;
  // Static assets served at "/" when set.
  std::filesystem::path static_dir;
  // Store polling interval for automatic reloads; zero disables polling.
  std::chrono::milliseconds watch_interval{2000};
};

// Stat-based fingerprint of everything under the store's topics directory.
// Changes whenever a file is added, removed, resized or touched.
std::string StoreFingerprint(const std::filesystem::path &store_root);

// HTTP front end for the API. Requests are served concurrently from the
// current snapshot; a reload swaps in a new snapshot without blocking
// in-flight requests. POST /api/reload (loopback clients only) forces a
// reload.
class ApiServer {
 public:
  explicit ApiServer(ServerOptions options);
  ~ApiServer();

  ApiServer(const ApiServer &) = delete;
  ApiServer &operator=(const ApiServer &) = delete;

  // Binds the socket and loads the first snapshot. Returns the bound port.
  // Throws Error(kIo) when binding fails.
  int Bind();
  // Serves until Stop() is called. Call after Bind().
  void Serve();
  // Bind() followed by Serve() on a background thread.
  int Start();
  void Stop();

  // Replaces the snapshot from the store. Keeps the old snapshot and
  // returns false when loading fails.
  bool Reload(std::string *error = nullptr);

  std::shared_ptr<const Snapshot> snapshot() const;

 private:
  void InstallRoutes();
  void WatchLoop();

  ServerOptions options_;
  Store store_;
  std::unique_ptr<httplib::Server> http_;

  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::string fingerprint_;

  std::thread serve_thread_;
  std::thread watch_thread_;
  std::mutex watch_mutex_;
  std::condition_variable watch_cv_;
  bool stopping_ = false;
};

}  // namespace newsalyze

#endif  // NEWSALYZE_SERVE_SERVER_H_

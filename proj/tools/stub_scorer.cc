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

// stub_scorer: local sentiment scorer service with scripted behavior, for
// trying out `newsalyze analyze --scorer remote` without a model server.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "newsalyze/base/errors.h"
#include "newsalyze/testing/stub_scorer.h"

int main(int argc, char **argv) {
  CLI::App app{"Stub remote sentiment scorer"};
  std::string mode = "valid";
  std::string host = "127.0.0.1";
  int port = 8090;
  app.add_option("--mode", mode, "Response behavior")
      ->check(CLI::IsMember(
          {"valid", "inconsistent", "hang", "malformed", "server-error"}));
  app.add_option("--host", host, "Bind address");
  app.add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    newsalyze::StubScorer stub(newsalyze::StubScorer::ParseMode(mode));
    std::cerr << "stub scorer (" << mode << ") on http://" << host << ":"
              << port << "/score\n";
    stub.Listen(host, port);
  } catch (const newsalyze::Error &e) {
    std::cerr << "stub_scorer: " << e.what() << "\n";
    return newsalyze::ExitCodeFor(e.code());
  }
  return 0;
}

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

// Writes every kind of API response body produced from the fixture corpus
// into a directory, one file per response, named <schema>.<case>.json. The
// schema test validates each file against schemas/<schema>.schema.json.

#include <filesystem>
#include <iostream>
#include <string>

#include "json.hpp"
#include "newsalyze/base/files.h"
#include "newsalyze/serve/api.h"
#include "newsalyze/store/codec.h"
#include "newsalyze/store/store.h"
#include "test_util.h"

namespace newsalyze {
namespace {

namespace fs = std::filesystem;

void Write(const fs::path &dir, const std::string &name,
           const ApiResponse &response, int expected_status) {
  if (response.status != expected_status) {
    throw std::runtime_error(name + ": status " +
                             std::to_string(response.status) + ", expected " +
                             std::to_string(expected_status));
  }
  WriteFileAtomic(dir / (name + ".json"), response.body);
}

int Main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: dump_payloads OUT_DIR\n";
    return 1;
  }
  fs::path out = argv[1];
  fs::remove_all(out);
  fs::create_directories(out);

  testing::TempDir empty_dir;
  auto empty = Snapshot::Load(Store(empty_dir.path()));
  Write(out, "topics.empty", GetTopics(*empty), 200);

  testing::TempDir dir;
  Store store(dir.path());
  testing::IngestFixtures(store);
  auto ingested = Snapshot::Load(store);
  Write(out, "topics.not_analyzed", GetTopics(*ingested), 200);
  Write(out, "error.no_bundle", GetOverview(*ingested, "iran-deal"), 409);

  testing::AnalyzeFixtures(store);
  auto analyzed = Snapshot::Load(store);
  Write(out, "topics.analyzed", GetTopics(*analyzed), 200);
  for (const auto &[topic_id, topic] : analyzed->topics()) {
    Write(out, "overview." + topic_id, GetOverview(*analyzed, topic_id), 200);
    for (const Article &article : topic.articles) {
      Write(out, "annotated." + article.article_id,
            GetAnnotatedArticle(*analyzed, article.article_id), 200);
    }
  }
  Write(out, "error.unknown_topic", GetOverview(*analyzed, "nope"), 404);
  Write(out, "error.unknown_article",
        GetAnnotatedArticle(*analyzed, "0000000000000000"), 404);
  Write(out, "error.unknown_endpoint", RouteGet(*analyzed, "/api/x"), 404);

  // A topic analysed with top_k larger than its concept count still yields
  // well-formed payloads.
  AnalysisParams wide;
  wide.top_k_concepts = 1000;
  AnalyzeTopic(store, "greenfield-budget", wide, testing::ShippedResources());
  auto widened = Snapshot::Load(store);
  Write(out, "overview.wide", GetOverview(*widened, "greenfield-budget"), 200);

  Json raw = Json(store.GetBundle("iran-deal"));
  raw["engine_version"] = "newsalyze-engine/0.0";
  WriteFileAtomic(store.BundlePath("iran-deal"), DumpJson(raw));
  WriteFileAtomic(store.BundlePath("greenfield-budget"), "[]");
  auto damaged = Snapshot::Load(store);
  Write(out, "error.version_mismatch", GetOverview(*damaged, "iran-deal"), 409);
  Write(out, "error.invalid_bundle",
        GetOverview(*damaged, "greenfield-budget"), 500);
  return 0;
}

}  // namespace
}  // namespace newsalyze

int main(int argc, char **argv) {
  try {
    return newsalyze::Main(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "dump_payloads: " << e.what() << "\n";
    return 1;
  }
}

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

#ifndef NEWSALYZE_SERVE_API_H_
#define NEWSALYZE_SERVE_API_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "newsalyze/store/codec.h"
#include "newsalyze/store/store.h"
#include "newsalyze/store/types.h"

// Read-only API over an immutable snapshot of the store. Handlers are pure
// functions of the snapshot, so equal store contents give byte-identical
// bodies. Payloads carry no timestamps.

namespace newsalyze {

// Everything the API serves, loaded once from a store.
class Snapshot {
 public:
  struct TopicEntry {
    TopicConfig config;
    // Sorted by article id.
    std::vector<Article> articles;
    std::optional<AnalysisBundle> bundle;
    // Why `bundle` is empty: "no_bundle", "version_mismatch" or
    // "invalid_bundle".
    std::string bundle_problem;
  };

  static std::shared_ptr<const Snapshot> Load(const Store &store);

  // Sorted by topic id.
  const std::map<std::string, TopicEntry> &topics() const { return topics_; }
  const TopicEntry *FindTopic(const std::string &topic_id) const;
  // The article and its topic. An article stored under several topics
  // resolves to the first topic in id order.
  std::pair<const TopicEntry *, const Article *> FindArticle(
      const std::string &article_id) const;

 private:
  std::map<std::string, TopicEntry> topics_;
  std::map<std::string, std::pair<std::string, std::size_t>> article_index_;
};

struct ApiResponse {
  int status = 200;
  std::string body;
};

// GET /api/topics
ApiResponse GetTopics(const Snapshot &snapshot);
// GET /api/topics/{id}/overview. 404 for an unknown topic, 409 when the
// topic has no usable analysis.
ApiResponse GetOverview(const Snapshot &snapshot, const std::string &topic_id);
// GET /api/articles/{id}/annotated. 404 for an unknown article, 409 when
// its topic has no usable analysis or the analysis predates the article.
ApiResponse GetAnnotatedArticle(const Snapshot &snapshot,
                                const std::string &article_id);

// Routes a GET path to the handlers above; 404 for anything else.
ApiResponse RouteGet(const Snapshot &snapshot, const std::string &path);

// Payload builders, exposed for tests and tools.
Json TopicsPayload(const Snapshot &snapshot);
Json OverviewPayload(const Snapshot::TopicEntry &topic);
Json AnnotatedPayload(const Snapshot::TopicEntry &topic,
                      const Article &article);

// {"error": error, "reason": reason}
Json ErrorPayload(const std::string &error, const std::string &reason);

}  // namespace newsalyze

#endif  // NEWSALYZE_SERVE_API_H_

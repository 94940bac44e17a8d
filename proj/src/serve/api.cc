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

#include "newsalyze/serve/api.h"

#include <algorithm>
#include <regex>
#include <set>
#include <tuple>

#include "newsalyze/aggregate/aggregate.h"
#include "newsalyze/base/errors.h"

namespace newsalyze {

std::shared_ptr<const Snapshot> Snapshot::Load(const Store &store) {
  auto snapshot = std::make_shared<Snapshot>();
  for (const std::string &topic_id : store.ListTopics()) {
    TopicEntry entry;
    std::tie(entry.config, entry.articles) = store.LoadTopic(topic_id);
    try {
      entry.bundle = store.GetBundle(topic_id);
    } catch (const Error &e) {
      switch (e.code()) {
        case ErrorCode::kNotAnalyzed:
          entry.bundle_problem = "no_bundle";
          break;
        case ErrorCode::kVersionMismatch:
          entry.bundle_problem = "version_mismatch";
          break;
        default:
          entry.bundle_problem = "invalid_bundle";
          break;
      }
    }
    for (std::size_t i = 0; i < entry.articles.size(); ++i) {
      snapshot->article_index_.emplace(entry.articles[i].article_id,
                                       std::make_pair(topic_id, i));
    }
    snapshot->topics_.emplace(topic_id, std::move(entry));
  }
  return snapshot;
}

const Snapshot::TopicEntry *Snapshot::FindTopic(
    const std::string &topic_id) const {
  auto it = topics_.find(topic_id);
  return it == topics_.end() ? nullptr : &it->second;
}

std::pair<const Snapshot::TopicEntry *, const Article *> Snapshot::FindArticle(
    const std::string &article_id) const {
  auto it = article_index_.find(article_id);
  if (it == article_index_.end()) return {nullptr, nullptr};
  const TopicEntry &topic = topics_.at(it->second.first);
  return {&topic, &topic.articles[it->second.second]};
}

Json ErrorPayload(const std::string &error, const std::string &reason) {
  return Json{{"error", error}, {"reason", reason}};
}

namespace {

ApiResponse Respond(int status, const Json &payload) {
  return {status, DumpJson(payload)};
}

ApiResponse NotAnalyzed(const Snapshot::TopicEntry &topic) {
  if (topic.bundle_problem == "invalid_bundle") {
    return Respond(500, ErrorPayload("internal", "invalid_bundle"));
  }
  return Respond(409, ErrorPayload("not_analyzed", topic.bundle_problem));
}

Json PublishedJson(const std::optional<std::string> &published) {
  return published ? Json(*published) : Json(nullptr);
}

}  // namespace

Json TopicsPayload(const Snapshot &snapshot) {
  Json topics = Json::array();
  for (const auto &[topic_id, topic] : snapshot.topics()) {
    topics.push_back({{"topic_id", topic_id},
                      {"title", topic.config.title},
                      {"article_count", topic.articles.size()},
                      {"analyzed", topic.bundle.has_value()}});
  }
  return topics;
}

Json OverviewPayload(const Snapshot::TopicEntry &topic) {
  const AnalysisBundle &bundle = *topic.bundle;
  Json concepts = Json::array();
  for (const Concept &c : bundle.TopConcepts()) {
    concepts.push_back({{"concept_id", c.concept_id},
                        {"canonical_label", c.canonical_label},
                        {"frequency", c.frequency},
                        {"article_count", c.per_article_frequency.size()}});
  }
  Json articles = Json::array();
  for (const OverviewEntry &entry : BuildOverview(topic.articles, bundle)) {
    articles.push_back({{"article_id", entry.article_id},
                        {"outlet", entry.outlet},
                        {"title", entry.title},
                        {"url", entry.url},
                        {"published", PublishedJson(entry.published)},
                        {"snippet", entry.snippet},
                        {"histogram", entry.histogram}});
  }
  return Json{{"topic_id", topic.config.topic_id},
              {"title", topic.config.title},
              {"params_used", bundle.params_used},
              {"engine_version", bundle.engine_version},
              {"concepts", concepts},
              {"articles", articles}};
}

Json AnnotatedPayload(const Snapshot::TopicEntry &topic,
                      const Article &article) {
  const AnalysisBundle &bundle = *topic.bundle;
  std::map<std::string, const Concept *> concept_of;
  for (const Concept &c : bundle.concepts) {
    for (const std::string &member : c.members) concept_of[member] = &c;
  }
  std::set<std::string> top_ids;
  for (const Concept &c : bundle.TopConcepts()) top_ids.insert(c.concept_id);

  std::vector<const ScoredMention *> scored;
  if (auto it = bundle.mentions_by_article.find(article.article_id);
      it != bundle.mentions_by_article.end()) {
    for (const ScoredMention &s : it->second) scored.push_back(&s);
  }
  std::sort(scored.begin(), scored.end(),
            [](const ScoredMention *a, const ScoredMention *b) {
              return std::tie(a->mention.span.start, a->mention.span.end) <
                     std::tie(b->mention.span.start, b->mention.span.end);
            });

  Json annotations = Json::array();
  for (const ScoredMention *s : scored) {
    const Concept &c = *concept_of.at(s->mention.mention_id);
    annotations.push_back(
        {{"start", s->mention.span.start},
         {"end", s->mention.span.end},
         {"mention_id", s->mention.mention_id},
         {"surface", s->mention.surface},
         {"concept_id", c.concept_id},
         {"canonical_label", c.canonical_label},
         {"in_top_k", top_ids.count(c.concept_id) > 0},
         {"score", s->polarity.score},
         {"label", PolarityLabelName(s->polarity.label)},
         {"confidence", s->polarity.confidence},
         {"scorer", s->polarity.scorer},
         {"color_class", ColorClassName(ColorClassFor(
                             s->polarity.score,
                             bundle.params_used.neutral_band))}});
  }
  return Json{{"article_id", article.article_id},
              {"topic_id", article.topic_id},
              {"outlet", article.outlet},
              {"title", article.title},
              {"url", article.url},
              {"published", PublishedJson(article.published)},
              {"body", article.body},
              {"annotations", annotations}};
}

ApiResponse GetTopics(const Snapshot &snapshot) {
  return Respond(200, TopicsPayload(snapshot));
}

ApiResponse GetOverview(const Snapshot &snapshot, const std::string &topic_id) {
  const Snapshot::TopicEntry *topic = snapshot.FindTopic(topic_id);
  if (topic == nullptr) {
    return Respond(404, ErrorPayload("not_found", "unknown_topic"));
  }
  if (!topic->bundle) return NotAnalyzed(*topic);
  return Respond(200, OverviewPayload(*topic));
}

ApiResponse GetAnnotatedArticle(const Snapshot &snapshot,
                                const std::string &article_id) {
  auto [topic, article] = snapshot.FindArticle(article_id);
  if (article == nullptr) {
    return Respond(404, ErrorPayload("not_found", "unknown_article"));
  }
  if (!topic->bundle) return NotAnalyzed(*topic);
  if (topic->bundle->mentions_by_article.count(article_id) == 0) {
    return Respond(409, ErrorPayload("not_analyzed", "article_not_in_bundle"));
  }
  return Respond(200, AnnotatedPayload(*topic, *article));
}

ApiResponse RouteGet(const Snapshot &snapshot, const std::string &path) {
  static const std::regex kOverview(R"(/api/topics/([^/]+)/overview)");
  static const std::regex kAnnotated(R"(/api/articles/([^/]+)/annotated)");
  std::smatch match;
  if (path == "/api/topics") return GetTopics(snapshot);
  if (std::regex_match(path, match, kOverview)) {
    return GetOverview(snapshot, match[1]);
  }
  if (std::regex_match(path, match, kAnnotated)) {
    return GetAnnotatedArticle(snapshot, match[1]);
  }
  return Respond(404, ErrorPayload("not_found", "unknown_endpoint"));
}

}  // namespace newsalyze

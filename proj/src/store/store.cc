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

#include "newsalyze/store/store.h"

#include <algorithm>
#include <map>
#include <set>

#include "newsalyze/base/errors.h"
#include "newsalyze/base/files.h"
#include "newsalyze/base/time.h"
#include "newsalyze/store/codec.h"

namespace newsalyze {

namespace fs = std::filesystem;

namespace {

void CheckTopicId(const std::string &topic_id) {
  if (!IsValidTopicId(topic_id)) {
    throw Error(ErrorCode::kValidation, "invalid topic id '" + topic_id + "'");
  }
}

bool IsHex(const std::string &text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

}  // namespace

void ValidateArticle(const Article &article) {
  if (!IsValidTopicId(article.topic_id)) {
    throw Error(ErrorCode::kValidation,
                "article has invalid topic id '" + article.topic_id + "'");
  }
  if (article.body.empty()) {
    throw Error(ErrorCode::kValidation,
                "article body is empty: " + article.url);
  }
  if (!IsValidAbsoluteUrl(article.url)) {
    throw Error(ErrorCode::kValidation, "invalid article url: " + article.url);
  }
  if (article.published && !IsIsoDate(*article.published)) {
    throw Error(ErrorCode::kValidation,
                "published is not an ISO-8601 date: " + *article.published);
  }
  if (!article.article_id.empty() &&
      article.article_id != ComputeArticleId(article.url, article.body)) {
    throw Error(ErrorCode::kValidation,
                "article_id does not match content hash: " +
                    article.article_id);
  }
}

void ValidateBundleStructure(const AnalysisBundle &bundle) {
  const auto fail = [](const std::string &message) {
    throw Error(ErrorCode::kValidation, "invalid bundle: " + message);
  };
  std::map<std::string, std::string> article_of_mention;
  for (const auto &[article_id, scored] : bundle.mentions_by_article) {
    for (const ScoredMention &s : scored) {
      if (s.mention.article_id != article_id) {
        fail("mention " + s.mention.mention_id + " filed under wrong article");
      }
      if (s.polarity.mention_id != s.mention.mention_id) {
        fail("polarity result does not match mention " +
             s.mention.mention_id);
      }
      if (!article_of_mention.emplace(s.mention.mention_id, article_id)
               .second) {
        fail("duplicate mention id " + s.mention.mention_id);
      }
    }
  }
  std::set<std::string> assigned;
  std::set<std::string> concept_ids;
  for (const Concept &c : bundle.concepts) {
    if (!concept_ids.insert(c.concept_id).second) {
      fail("duplicate concept id " + c.concept_id);
    }
    if (c.members.empty()) fail("concept " + c.concept_id + " is empty");
    int per_article_total = 0;
    for (const auto &[article_id, count] : c.per_article_frequency) {
      per_article_total += count;
    }
    if (c.frequency != static_cast<int>(c.members.size()) ||
        per_article_total != c.frequency) {
      fail("frequency bookkeeping of concept " + c.concept_id);
    }
    std::map<std::string, int> recount;
    for (const std::string &member : c.members) {
      auto it = article_of_mention.find(member);
      if (it == article_of_mention.end()) {
        fail("concept " + c.concept_id + " references unknown mention " +
             member);
      }
      if (!assigned.insert(member).second) {
        fail("mention " + member + " belongs to more than one concept");
      }
      ++recount[it->second];
    }
    if (recount != c.per_article_frequency) {
      fail("per_article_frequency of concept " + c.concept_id);
    }
  }
  if (assigned.size() != article_of_mention.size()) {
    fail("some mentions belong to no concept");
  }
  for (const auto &[article_id, histogram] : bundle.histograms) {
    if (histogram.article_id != article_id) {
      fail("histogram filed under wrong article " + article_id);
    }
    if (histogram.bars.size() != histogram.concept_order.size()) {
      fail("histogram bars do not match concept order for " + article_id);
    }
    for (std::size_t i = 0; i < histogram.bars.size(); ++i) {
      if (histogram.bars[i].concept_id != histogram.concept_order[i] ||
          !concept_ids.count(histogram.bars[i].concept_id)) {
        fail("histogram of " + article_id + " references unknown concept");
      }
    }
  }
}

Store::Store(fs::path root) : root_(std::move(root)) {}

fs::path Store::TopicDir(const std::string &topic_id) const {
  return root_ / "topics" / topic_id;
}

fs::path Store::ArticlePath(const std::string &topic_id,
                            const std::string &article_id) const {
  return TopicDir(topic_id) / "articles" / (article_id + ".json");
}

fs::path Store::BundlePath(const std::string &topic_id) const {
  return TopicDir(topic_id) / "analysis" / "bundle.json";
}

fs::path Store::LockPath() const { return root_ / ".newsalyze.lock"; }

void Store::PutTopicConfig(const TopicConfig &config) {
  config.Validate();
  WriteFileAtomic(TopicDir(config.topic_id) / "config.json",
                  DumpJson(Json(config)));
}

bool Store::HasTopic(const std::string &topic_id) const {
  if (!IsValidTopicId(topic_id)) return false;
  std::error_code ec;
  return fs::is_regular_file(TopicDir(topic_id) / "config.json", ec);
}

TopicConfig Store::GetTopicConfig(const std::string &topic_id) const {
  if (!HasTopic(topic_id)) {
    throw Error(ErrorCode::kNotFound, "unknown topic '" + topic_id + "'");
  }
  fs::path path = TopicDir(topic_id) / "config.json";
  return ParseJsonAs<TopicConfig>(ReadFile(path), path.string());
}

std::vector<std::string> Store::ListTopics() const {
  std::vector<std::string> ids;
  std::error_code ec;
  fs::path dir = root_ / "topics";
  if (!fs::is_directory(dir, ec)) return ids;
  for (const auto &entry : fs::directory_iterator(dir, ec)) {
    std::string id = entry.path().filename().string();
    if (HasTopic(id)) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string Store::PutArticle(Article article, bool *created) {
  ValidateArticle(article);
  if (!HasTopic(article.topic_id)) {
    throw Error(ErrorCode::kNotFound,
                "unknown topic '" + article.topic_id + "'");
  }
  if (article.article_id.empty()) {
    article.article_id = ComputeArticleId(article.url, article.body);
  }
  bool is_new = !HasArticle(article.topic_id, article.article_id);
  if (is_new) {
    WriteFileAtomic(ArticlePath(article.topic_id, article.article_id),
                    DumpJson(Json(article)));
  }
  if (created != nullptr) *created = is_new;
  return article.article_id;
}

bool Store::HasArticle(const std::string &topic_id,
                       const std::string &article_id) const {
  if (!IsValidTopicId(topic_id) || !IsHex(article_id)) return false;
  std::error_code ec;
  return fs::is_regular_file(ArticlePath(topic_id, article_id), ec);
}

Article Store::GetArticle(const std::string &topic_id,
                          const std::string &article_id) const {
  if (!HasArticle(topic_id, article_id)) {
    throw Error(ErrorCode::kNotFound, "unknown article '" + article_id + "'");
  }
  fs::path path = ArticlePath(topic_id, article_id);
  return ParseJsonAs<Article>(ReadFile(path), path.string());
}

std::vector<std::string> Store::ListArticleIds(
    const std::string &topic_id) const {
  CheckTopicId(topic_id);
  std::vector<std::string> ids;
  std::error_code ec;
  fs::path dir = TopicDir(topic_id) / "articles";
  if (!fs::is_directory(dir, ec)) return ids;
  for (const auto &entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() != ".json") continue;
    std::string id = entry.path().stem().string();
    if (IsHex(id)) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::pair<TopicConfig, std::vector<Article>> Store::LoadTopic(
    const std::string &topic_id) const {
  TopicConfig config = GetTopicConfig(topic_id);
  std::vector<Article> articles;
  for (const std::string &id : ListArticleIds(topic_id)) {
    articles.push_back(GetArticle(topic_id, id));
  }
  return {std::move(config), std::move(articles)};
}

void Store::PutBundle(const AnalysisBundle &bundle) {
  if (!HasTopic(bundle.topic_id)) {
    throw Error(ErrorCode::kNotFound,
                "unknown topic '" + bundle.topic_id + "'");
  }
  ValidateBundleStructure(bundle);
  bundle.params_used.Validate();
  const auto check_article = [&](const std::string &article_id) {
    if (!HasArticle(bundle.topic_id, article_id)) {
      throw Error(ErrorCode::kValidation,
                  "bundle references unknown article '" + article_id + "'");
    }
  };
  for (const auto &[article_id, unused] : bundle.mentions_by_article) {
    check_article(article_id);
  }
  for (const auto &[article_id, unused] : bundle.histograms) {
    check_article(article_id);
  }
  WriteFileAtomic(BundlePath(bundle.topic_id), DumpJson(Json(bundle)));
}

bool Store::HasBundle(const std::string &topic_id) const {
  if (!IsValidTopicId(topic_id)) return false;
  std::error_code ec;
  return fs::is_regular_file(BundlePath(topic_id), ec);
}

AnalysisBundle Store::GetBundle(const std::string &topic_id) const {
  if (!HasTopic(topic_id)) {
    throw Error(ErrorCode::kNotFound, "unknown topic '" + topic_id + "'");
  }
  if (!HasBundle(topic_id)) {
    throw Error(ErrorCode::kNotAnalyzed,
                "topic '" + topic_id + "' is not analyzed");
  }
  fs::path path = BundlePath(topic_id);
  auto bundle = ParseJsonAs<AnalysisBundle>(ReadFile(path), path.string());
  if (bundle.engine_version != kEngineVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "bundle of topic '" + topic_id + "' was written by " +
                    bundle.engine_version + ", expected " + kEngineVersion);
  }
  return bundle;
}

}  // namespace newsalyze

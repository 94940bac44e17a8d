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

#ifndef NEWSALYZE_STORE_STORE_H_
#define NEWSALYZE_STORE_STORE_H_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "newsalyze/store/types.h"

namespace newsalyze {

// On-disk store. Layout under the root directory:
//
//   topics/<topic_id>/config.json
//   topics/<topic_id>/articles/<article_id>.json
//   topics/<topic_id>/analysis/bundle.json
//
// Every write goes through write-temp-then-rename. The store has a single
// writer (the pipeline) and any number of readers.
class Store {
 public:
  explicit Store(std::filesystem::path root);

  const std::filesystem::path &root() const { return root_; }

  void PutTopicConfig(const TopicConfig &config);
  bool HasTopic(const std::string &topic_id) const;
  TopicConfig GetTopicConfig(const std::string &topic_id) const;
  // Sorted topic ids.
  std::vector<std::string> ListTopics() const;

  // Stores an article under its topic. Computes the article id when empty;
  // rejects a mismatching one. Storing identical content twice is a no-op;
  // *created tells whether a new file was written.
  std::string PutArticle(Article article, bool *created = nullptr);
  bool HasArticle(const std::string &topic_id,
                  const std::string &article_id) const;
  Article GetArticle(const std::string &topic_id,
                     const std::string &article_id) const;
  // Sorted article ids of a topic.
  std::vector<std::string> ListArticleIds(const std::string &topic_id) const;

  // Config plus all articles sorted ascending by article_id. Throws
  // Error(kNotFound) for an unknown topic.
  std::pair<TopicConfig, std::vector<Article>> LoadTopic(
      const std::string &topic_id) const;

  // Validates the bundle against the stored articles before writing it.
  void PutBundle(const AnalysisBundle &bundle);
  bool HasBundle(const std::string &topic_id) const;
  // Throws Error(kNotAnalyzed) when no bundle exists and
  // Error(kVersionMismatch) when it was written by another engine version.
  AnalysisBundle GetBundle(const std::string &topic_id) const;

  std::filesystem::path TopicDir(const std::string &topic_id) const;
  std::filesystem::path BundlePath(const std::string &topic_id) const;
  std::filesystem::path LockPath() const;

 private:
  std::filesystem::path ArticlePath(const std::string &topic_id,
                                    const std::string &article_id) const;

  std::filesystem::path root_;
};

// Throws Error(kValidation) if the article breaks an Article invariant.
void ValidateArticle(const Article &article);

// Structural checks on a bundle that do not need the store: every scored
// mention belongs to exactly one concept, concept bookkeeping adds up, and
// histograms reference known concepts.
void ValidateBundleStructure(const AnalysisBundle &bundle);

}  // namespace newsalyze

#endif  // NEWSALYZE_STORE_STORE_H_

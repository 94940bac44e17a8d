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

#include <algorithm>
#include <random>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "newsalyze/base/files.h"
#include "newsalyze/base/hash.h"
#include "newsalyze/store/codec.h"
#include "newsalyze/store/store.h"
#include "test_util.h"

namespace newsalyze {
namespace {

using testing::TempDir;
using testing::ThrownCode;

TopicConfig SampleConfig(const std::string &topic_id = "sample-topic") {
  TopicConfig config;
  config.topic_id = topic_id;
  config.title = "Sample topic";
  config.sources = {{"Example News", "https://example.com/a"},
                    {"News Example", "https://news.example/x"}};
  return config;
}

Article SampleArticle(const std::string &url, const std::string &body) {
  Article article;
  article.topic_id = "sample-topic";
  article.outlet = "Example News";
  article.url = url;
  article.title = "A title";
  article.published = "2018-05-08";
  article.body = body;
  article.fetched_at = "2026-01-01T00:00:00Z";
  return article;
}

// Expected ids are sha256(url + "\n" + body)[:16] computed with Python's
// hashlib.
TEST(ArticleIdTest, MatchesIndependentHashes) {
  EXPECT_EQ(ComputeArticleId("https://example.com/a", "Hello world."),
            "7348b00f580a30ef");
  EXPECT_EQ(ComputeArticleId("https://example.com/a", "Hello world!"),
            "6c1fcc112c1eacb2");
  EXPECT_EQ(ComputeArticleId("https://news.example/x", "Body text."),
            "79b3f0910dd14a40");
  EXPECT_EQ(ComputeArticleId("https://news.example/x", "Caf\xC3\xA9 body."),
            "834cfd5448311aff");
}

TEST(ArticleIdTest, FixtureFileNamesAreUrlHashes) {
  EXPECT_EQ(Sha256Hex("https://news.example/story"),
            "039e3d9e0973b684ddc83ea9774699719abe3b91ff4487f9b96076cfa926874e");
}

TEST(ValidationTest, TopicIdsAreSlugs) {
  EXPECT_TRUE(IsValidTopicId("iran-deal"));
  EXPECT_TRUE(IsValidTopicId("2018-budget"));
  EXPECT_FALSE(IsValidTopicId(""));
  EXPECT_FALSE(IsValidTopicId("Iran-Deal"));
  EXPECT_FALSE(IsValidTopicId("iran_deal"));
  EXPECT_FALSE(IsValidTopicId("../etc"));
}

TEST(ValidationTest, AbsoluteUrls) {
  EXPECT_TRUE(IsValidAbsoluteUrl("https://example.com/a"));
  EXPECT_TRUE(IsValidAbsoluteUrl("http://127.0.0.1:8080/x?y=1"));
  EXPECT_FALSE(IsValidAbsoluteUrl("example.com/a"));
  EXPECT_FALSE(IsValidAbsoluteUrl("/relative/path"));
  EXPECT_FALSE(IsValidAbsoluteUrl("https://"));
}

TEST(ValidationTest, ConfigRejectsBadFields) {
  TopicConfig config = SampleConfig();
  EXPECT_FALSE(ThrownCode([&] { config.Validate(); }));
  config.sources.clear();
  EXPECT_EQ(ThrownCode([&] { config.Validate(); }), ErrorCode::kValidation);
  config = SampleConfig("Bad Id");
  EXPECT_EQ(ThrownCode([&] { config.Validate(); }), ErrorCode::kValidation);
  config = SampleConfig();
  config.analysis_params.top_k_concepts = 0;
  EXPECT_EQ(ThrownCode([&] { config.Validate(); }), ErrorCode::kValidation);
  config = SampleConfig();
  config.analysis_params.merge_threshold = 1.5;
  EXPECT_EQ(ThrownCode([&] { config.Validate(); }), ErrorCode::kValidation);
}

TEST(ValidationTest, ConfigDefaultsApplyWhenParamsMissing) {
  auto config = ParseJsonAs<TopicConfig>(
      R"({"topic_id": "t", "title": "T",
          "sources": [{"outlet_name": "O", "url": "https://o.example/1"}]})",
      "config");
  EXPECT_EQ(config.analysis_params, AnalysisParams());
  EXPECT_EQ(config.analysis_params.top_k_concepts, 6);
  EXPECT_DOUBLE_EQ(config.analysis_params.merge_threshold, 0.85);
  EXPECT_EQ(config.analysis_params.negation_window, 3);
  EXPECT_DOUBLE_EQ(config.analysis_params.neutral_band, 0.1);
}

TEST(ValidationTest, MalformedJsonIsValidationError) {
  EXPECT_EQ(ThrownCode([] { ParseJsonAs<TopicConfig>("{", "config"); }),
            ErrorCode::kValidation);
  EXPECT_EQ(ThrownCode([] {
              ParseJsonAs<TopicConfig>(R"({"topic_id": 5})", "config");
            }),
            ErrorCode::kValidation);
}

TEST(StoreTest, PutArticleIsIdempotent) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig());
  bool created = false;
  std::string id = store.PutArticle(
      SampleArticle("https://example.com/a", "Hello world."), &created);
  EXPECT_EQ(id, "7348b00f580a30ef");
  EXPECT_TRUE(created);

  std::string first_bytes =
      ReadFile(dir.path() / "topics/sample-topic/articles/7348b00f580a30ef.json");
  Article again = SampleArticle("https://example.com/a", "Hello world.");
  again.fetched_at = "2030-01-01T00:00:00Z";
  EXPECT_EQ(store.PutArticle(again, &created), id);
  EXPECT_FALSE(created);
  EXPECT_EQ(ReadFile(dir.path() /
                     "topics/sample-topic/articles/7348b00f580a30ef.json"),
            first_bytes);
  EXPECT_THAT(store.ListArticleIds("sample-topic"),
              ::testing::ElementsAre("7348b00f580a30ef"));
}

TEST(StoreTest, ChangedBodyIsNewArticle) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig());
  store.PutArticle(SampleArticle("https://example.com/a", "Hello world."));
  store.PutArticle(SampleArticle("https://example.com/a", "Hello world!"));
  EXPECT_THAT(store.ListArticleIds("sample-topic"),
              ::testing::ElementsAre("6c1fcc112c1eacb2", "7348b00f580a30ef"));
}

TEST(StoreTest, RejectsInvalidArticles) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig());
  EXPECT_EQ(ThrownCode([&] {
              store.PutArticle(SampleArticle("https://example.com/a", ""));
            }),
            ErrorCode::kValidation);
  Article bad_date = SampleArticle("https://example.com/a", "Text.");
  bad_date.published = "May 8th";
  EXPECT_EQ(ThrownCode([&] { store.PutArticle(bad_date); }),
            ErrorCode::kValidation);
  Article bad_id = SampleArticle("https://example.com/a", "Hello world.");
  bad_id.article_id = "0000000000000000";
  EXPECT_EQ(ThrownCode([&] { store.PutArticle(bad_id); }),
            ErrorCode::kValidation);
  Article orphan = SampleArticle("https://example.com/a", "Hello world.");
  orphan.topic_id = "other-topic";
  EXPECT_EQ(ThrownCode([&] { store.PutArticle(orphan); }),
            ErrorCode::kNotFound);
  EXPECT_TRUE(store.ListArticleIds("sample-topic").empty());
}

TEST(StoreTest, LoadTopicSortsByArticleId) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig());
  store.PutArticle(SampleArticle("https://example.com/a", "Hello world."));
  store.PutArticle(SampleArticle("https://news.example/x", "Body text."));
  store.PutArticle(SampleArticle("https://example.com/a", "Hello world!"));
  auto [config, articles] = store.LoadTopic("sample-topic");
  EXPECT_EQ(config, SampleConfig());
  ASSERT_EQ(articles.size(), 3u);
  EXPECT_EQ(articles[0].article_id, "6c1fcc112c1eacb2");
  EXPECT_EQ(articles[1].article_id, "7348b00f580a30ef");
  EXPECT_EQ(articles[2].article_id, "79b3f0910dd14a40");
}

TEST(StoreTest, UnknownTopicIsNotFound) {
  TempDir dir;
  Store store(dir.path());
  EXPECT_TRUE(store.ListTopics().empty());
  EXPECT_EQ(ThrownCode([&] { store.LoadTopic("nope"); }),
            ErrorCode::kNotFound);
  EXPECT_EQ(ThrownCode([&] { store.GetBundle("nope"); }),
            ErrorCode::kNotFound);
  EXPECT_FALSE(store.HasTopic("../escape"));
}

TEST(StoreTest, ListTopicsIsSorted) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig("zeta"));
  store.PutTopicConfig(SampleConfig("alpha"));
  store.PutTopicConfig(SampleConfig("mid-1"));
  EXPECT_THAT(store.ListTopics(),
              ::testing::ElementsAre("alpha", "mid-1", "zeta"));
}

AnalysisBundle TinyBundle(const std::string &article_id) {
  AnalysisBundle bundle;
  bundle.topic_id = "sample-topic";
  bundle.engine_version = kEngineVersion;
  ScoredMention scored;
  scored.mention = {article_id + "-m00000", article_id, 0, {0, 5},
                    "Hello", "Hello", MentionKind::kOther};
  scored.polarity = {article_id + "-m00000", 0.25, PolarityLabel::kPositive,
                     0.5, "lexicon"};
  bundle.mentions_by_article[article_id] = {scored};
  Concept c;
  c.concept_id = "c1";
  c.canonical_label = "Hello";
  c.members = {article_id + "-m00000"};
  c.frequency = 1;
  c.per_article_frequency[article_id] = 1;
  bundle.concepts = {c};
  FramingHistogram histogram;
  histogram.article_id = article_id;
  histogram.concept_order = {"c1"};
  histogram.bars = {{"c1", 1, 1.0, 0.25, ColorClass::kPositive}};
  bundle.histograms[article_id] = histogram;
  return bundle;
}

TEST(StoreTest, BundleRoundTrip) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig());
  std::string id =
      store.PutArticle(SampleArticle("https://example.com/a", "Hello world."));
  EXPECT_EQ(ThrownCode([&] { store.GetBundle("sample-topic"); }),
            ErrorCode::kNotAnalyzed);
  AnalysisBundle bundle = TinyBundle(id);
  store.PutBundle(bundle);
  EXPECT_EQ(store.GetBundle("sample-topic"), bundle);
}

TEST(StoreTest, BundleWithUnknownArticleIsRejected) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig());
  EXPECT_EQ(ThrownCode([&] { store.PutBundle(TinyBundle("0123456789abcdef")); }),
            ErrorCode::kValidation);
  EXPECT_FALSE(store.HasBundle("sample-topic"));
}

TEST(StoreTest, BundleFromOtherEngineVersionIsMismatch) {
  TempDir dir;
  Store store(dir.path());
  store.PutTopicConfig(SampleConfig());
  std::string id =
      store.PutArticle(SampleArticle("https://example.com/a", "Hello world."));
  AnalysisBundle bundle = TinyBundle(id);
  bundle.engine_version = "newsalyze-engine/0.9";
  WriteFileAtomic(store.BundlePath("sample-topic"), DumpJson(Json(bundle)));
  EXPECT_EQ(ThrownCode([&] { store.GetBundle("sample-topic"); }),
            ErrorCode::kVersionMismatch);
}

TEST(BundleStructureTest, DetectsBrokenBookkeeping) {
  const std::string id = "7348b00f580a30ef";
  EXPECT_FALSE(ThrownCode([&] { ValidateBundleStructure(TinyBundle(id)); }));

  AnalysisBundle orphan_mention = TinyBundle(id);
  orphan_mention.concepts.clear();
  orphan_mention.histograms.clear();
  EXPECT_EQ(ThrownCode([&] { ValidateBundleStructure(orphan_mention); }),
            ErrorCode::kValidation);

  AnalysisBundle double_member = TinyBundle(id);
  Concept copy = double_member.concepts[0];
  copy.concept_id = "c2";
  double_member.concepts.push_back(copy);
  EXPECT_EQ(ThrownCode([&] { ValidateBundleStructure(double_member); }),
            ErrorCode::kValidation);

  AnalysisBundle wrong_frequency = TinyBundle(id);
  wrong_frequency.concepts[0].frequency = 2;
  EXPECT_EQ(ThrownCode([&] { ValidateBundleStructure(wrong_frequency); }),
            ErrorCode::kValidation);

  AnalysisBundle unknown_bar = TinyBundle(id);
  unknown_bar.histograms[id].bars[0].concept_id = "c9";
  unknown_bar.histograms[id].concept_order[0] = "c9";
  EXPECT_EQ(ThrownCode([&] { ValidateBundleStructure(unknown_bar); }),
            ErrorCode::kValidation);
}

// Property: every stored record survives a JSON round trip unchanged, and
// its canonical text form is a fixed point.
TEST(CodecPropertyTest, RoundTripOverRandomArticles) {
  std::mt19937 rng(20180508);
  const std::vector<std::string> pieces = {
      "Trump", " ", "said", "\n", "caf\xC3\xA9", "\xE2\x80\x9Cquote\xE2\x80\x9D",
      "\"", "\\", "tab\t", "\xF0\x9F\x93\xB0", "<b>", "&amp;"};
  for (int i = 0; i < 200; ++i) {
    std::string body;
    int length = 1 + static_cast<int>(rng() % 30);
    for (int j = 0; j < length; ++j) body += pieces[rng() % pieces.size()];
    Article article = SampleArticle("https://example.com/" + std::to_string(i),
                                    body);
    if (i % 3 == 0) article.published.reset();
    article.article_id = ComputeArticleId(article.url, article.body);
    std::string text = DumpJson(Json(article));
    Article back = ParseJsonAs<Article>(text, "article");
    ASSERT_EQ(back, article);
    ASSERT_EQ(DumpJson(Json(back)), text);
  }
}

TEST(CodecPropertyTest, CanonicalDumpSortsKeys) {
  std::string text = DumpJson(Json{{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}});
  EXPECT_EQ(text,
            "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
}

TEST(CodecTest, EnumsUseLowercaseNames) {
  Json bar = Bar{"c1", 2, 0.5, -0.6, ColorClass::kStrongNegative};
  EXPECT_EQ(bar["color_class"], "strong-negative");
  Json mention = Mention{"x-m00000", "x", 0, {0, 1}, "A", "A",
                         MentionKind::kPerson};
  EXPECT_EQ(mention["kind"], "person");
  Json polarity = PolarityResult{"x-m00000", -0.5, PolarityLabel::kNegative,
                                 0.5, "lexicon"};
  EXPECT_EQ(polarity["label"], "negative");
}

}  // namespace
}  // namespace newsalyze

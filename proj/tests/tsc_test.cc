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

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "newsalyze/base/utf8.h"
#include "newsalyze/testing/stub_scorer.h"
#include "newsalyze/tsc/lexicon.h"
#include "newsalyze/tsc/scorer.h"
#include "oracles.h"
#include "test_util.h"

namespace newsalyze {
namespace {

using testing::ShippedResources;
using testing::ThrownCode;
using testing::WordTokens;

std::vector<std::string> Split(const std::string &sentence) {
  std::istringstream in(sentence);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

// A sentence as consecutive word tokens plus the mention over
// words[first, last).
struct Scene {
  std::vector<Token> tokens;
  Span sentence;
  Mention mention;
};

Scene MakeScene(const std::vector<std::string> &words, std::size_t first,
                std::size_t last) {
  Scene scene;
  scene.tokens = WordTokens(words);
  scene.sentence = {0, scene.tokens.back().span.end};
  scene.mention.mention_id = "0123456789abcdef-m00000";
  scene.mention.span = {scene.tokens[first].span.start,
                        scene.tokens[last - 1].span.end};
  return scene;
}

PolarityResult Score(const std::vector<std::string> &words, std::size_t first,
                     std::size_t last, const Lexicon &lexicon,
                     const AnalysisParams &params = AnalysisParams()) {
  Scene scene = MakeScene(words, first, last);
  return ScoreLexicon(scene.tokens, scene.sentence, scene.mention, lexicon,
                      params);
}

Lexicon SmallLexicon(std::initializer_list<LexiconEntry> entries) {
  Lexicon lexicon;
  for (const LexiconEntry &e : entries) lexicon.Add(e);
  return lexicon;
}

TEST(LexiconTest, LoadsShippedFile) {
  const Lexicon &lexicon = ShippedResources().lexicon;
  EXPECT_GT(lexicon.size(), 1500u);
  EXPECT_EQ(lexicon.size(),
            testing::ReadLexiconMap(testing::DataDir() / "lexicon.tsv").size());
  for (const auto &[term, polarity] :
       testing::ReadLexiconMap(testing::DataDir() / "lexicon.tsv")) {
    ASSERT_EQ(lexicon.Find(term), polarity) << term;
    ASSERT_GE(polarity, -1.0);
    ASSERT_LE(polarity, 1.0);
  }
}

TEST(LexiconTest, RejectsBadEntries) {
  Lexicon lexicon;
  lexicon.Add({"good", 0.5});
  EXPECT_EQ(ThrownCode([&] { lexicon.Add({"good", 0.4}); }),
            ErrorCode::kValidation);
  EXPECT_EQ(ThrownCode([&] { lexicon.Add({"Bad", -0.4}); }),
            ErrorCode::kValidation);
  EXPECT_EQ(ThrownCode([&] { lexicon.Add({"huge", 1.5}); }),
            ErrorCode::kValidation);
}

TEST(LexiconTest, ReversedNegatesEveryEntry) {
  Lexicon lexicon = SmallLexicon({{"good", 0.5}, {"bad", -0.25}});
  Lexicon reversed = lexicon.Reversed();
  EXPECT_EQ(reversed.Find("good"), -0.5);
  EXPECT_EQ(reversed.Find("bad"), 0.25);
  EXPECT_EQ(reversed.size(), 2u);
}

TEST(NegatorTest, List) {
  for (const char *w : {"not", "n't", "no", "never", "without", "didn't",
                        "wasn\xE2\x80\x99t"}) {
    EXPECT_TRUE(IsNegator(w)) << w;
  }
  for (const char *w : {"nothing", "know", "note", "nt"}) {
    EXPECT_FALSE(IsNegator(w)) << w;
  }
}

TEST(ScoreLexiconTest, PraisedExample) {
  // praised is 1 token from Trump: 0.8 * 1 / (1 + 1) = 0.4.
  PolarityResult result = Score(Split("Trump praised the deal"), 0, 1,
                                SmallLexicon({{"praised", 0.8}}));
  EXPECT_DOUBLE_EQ(result.score, 0.4);
  EXPECT_EQ(result.label, PolarityLabel::kPositive);
  EXPECT_DOUBLE_EQ(result.confidence, 1.0 / 3.0);
  EXPECT_EQ(result.scorer, "lexicon");
  EXPECT_EQ(result.mention_id, "0123456789abcdef-m00000");
}

TEST(ScoreLexiconTest, NoHits) {
  PolarityResult result = Score(Split("Trump signed the deal"), 0, 1,
                                SmallLexicon({{"praised", 0.8}}));
  EXPECT_EQ(result.score, 0.0);
  EXPECT_EQ(result.label, PolarityLabel::kNeutral);
  EXPECT_EQ(result.confidence, 0.0);
}

TEST(ScoreLexiconTest, NegatedExample) {
  // praise is 3 tokens from Trump, "not" directly precedes it:
  // -0.8 * 1 / (1 + 3) = -0.2.
  PolarityResult result = Score(Split("Trump did not praise the deal"), 0, 1,
                                SmallLexicon({{"praise", 0.8}}));
  EXPECT_DOUBLE_EQ(result.score, -0.2);
  EXPECT_EQ(result.label, PolarityLabel::kNegative);
}

TEST(ScoreLexiconTest, NegationWindowBoundary) {
  Lexicon lexicon = SmallLexicon({{"good", 0.6}});
  AnalysisParams params;
  params.negation_window = 3;
  // "never" three tokens before "good" negates, four tokens does not.
  EXPECT_LT(Score(Split("Trump never x y good"), 0, 1, lexicon, params).score, 0);
  EXPECT_GT(Score(Split("Trump never x y z good"), 0, 1, lexicon, params).score, 0);
  params.negation_window = 0;
  EXPECT_GT(Score(Split("Trump not good"), 0, 1, lexicon, params).score, 0);
}

TEST(ScoreLexiconTest, NearestMentionTokenAndSelfTokens) {
  Lexicon lexicon = SmallLexicon({{"great", 0.9}, {"evil", -0.9}});
  // Mention "Great Satan" spans tokens 2-3; "evil" at 5 is 2 tokens from 3.
  std::vector<std::string> words = Split("They called Great Satan truly evil");
  PolarityResult result = Score(words, 2, 4, lexicon);
  EXPECT_DOUBLE_EQ(result.score, -0.9 / 3.0);
  AnalysisParams params;
  params.include_self_tokens = true;
  result = Score(words, 2, 4, lexicon, params);
  EXPECT_DOUBLE_EQ(result.score, 0.9 - 0.9 / 3.0);
  EXPECT_DOUBLE_EQ(result.confidence, 2.0 / 3.0);
}

TEST(ScoreLexiconTest, ClampsAndCapsConfidence) {
  Lexicon lexicon = SmallLexicon({{"superb", 1.0}});
  PolarityResult result =
      Score(Split("superb superb Trump superb superb"), 2, 3, lexicon);
  EXPECT_EQ(result.score, 1.0);
  EXPECT_EQ(result.confidence, 1.0);
}

TEST(ScoreLexiconTest, MatchesCaseInsensitively) {
  PolarityResult result =
      Score(Split("Trump PRAISED it"), 0, 1, SmallLexicon({{"praised", 0.8}}));
  EXPECT_DOUBLE_EQ(result.score, 0.4);
}

TEST(ScoreLexiconTest, MentionOutsideSentenceIsContractError) {
  Scene scene = MakeScene(Split("Trump praised the deal"), 0, 1);
  scene.mention.span = {30, 35};
  EXPECT_EQ(ThrownCode([&] {
              ScoreLexicon(scene.tokens, scene.sentence, scene.mention,
                           ShippedResources().lexicon, AnalysisParams());
            }),
            ErrorCode::kContract);
}

TEST(LabelTest, NeutralBandIsInclusive) {
  EXPECT_EQ(LabelForScore(0.1, 0.1), PolarityLabel::kNeutral);
  EXPECT_EQ(LabelForScore(-0.1, 0.1), PolarityLabel::kNeutral);
  EXPECT_EQ(LabelForScore(0.1000001, 0.1), PolarityLabel::kPositive);
  EXPECT_EQ(LabelForScore(-0.1000001, 0.1), PolarityLabel::kNegative);
  EXPECT_EQ(LabelForScore(0.0, 0.0), PolarityLabel::kNeutral);
}

class LexiconOracleTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    lexicon_map_ = new std::map<std::string, double>(
        testing::ReadLexiconMap(testing::DataDir() / "lexicon.tsv"));
    terms_ = new std::vector<std::string>();
    for (const auto &[term, polarity] : *lexicon_map_) {
      if (term.find_first_not_of("abcdefghijklmnopqrstuvwxyz-'") ==
          std::string::npos) {
        terms_->push_back(term);
      }
    }
  }

  static std::map<std::string, double> *lexicon_map_;
  static std::vector<std::string> *terms_;
};

std::map<std::string, double> *LexiconOracleTest::lexicon_map_ = nullptr;
std::vector<std::string> *LexiconOracleTest::terms_ = nullptr;

TEST_F(LexiconOracleTest, RandomSentencesMatchBruteForce) {
  std::mt19937 rng(31337);
  int with_hits = 0;
  int negated = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    testing::GeneratedSentence s =
        testing::RandomScoringSentence(rng, *terms_, 15);
    AnalysisParams params;
    params.negation_window = static_cast<int>(rng() % 5);
    params.include_self_tokens = rng() % 4 == 0;
    PolarityResult actual =
        Score(s.words, s.mention_first, s.mention_last,
              ShippedResources().lexicon, params);
    testing::OracleScore expected = testing::LexiconOracle(
        s.words, s.mention_first, s.mention_last, *lexicon_map_,
        params.negation_window, params.neutral_band,
        params.include_self_tokens);
    ASSERT_LE(s.words.size(), 15u);
    ASSERT_NEAR(actual.score, expected.score, 1e-12) << trial;
    ASSERT_EQ(PolarityLabelName(actual.label), expected.label);
    ASSERT_NEAR(actual.confidence, expected.confidence, 1e-12);
    with_hits += expected.confidence > 0;
    negated += actual.score < 0;
  }
  // The generator must actually exercise hits and negations.
  EXPECT_GT(with_hits, 800);
  EXPECT_GT(negated, 200);
}

// Property: negating the only hit negates the score exactly. When the hit
// precedes the mention, "not" is inserted directly before it, which shifts
// hit and mention alike. When the hit follows the mention, the filler word
// directly before the hit becomes "not" so the distance stays the same.
TEST_F(LexiconOracleTest, NegationFlip) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string &term = (*terms_)[rng() % terms_->size()];
    std::size_t gap = rng() % 3;
    std::vector<std::string> words;
    std::size_t mention;
    std::size_t hit;
    if (trial % 2 == 0) {
      words = {"officials", term};
      hit = 1;
      for (std::size_t i = 0; i < gap; ++i) words.push_back("the");
      mention = words.size();
      words.push_back("Trump");
      PolarityResult plain =
          Score(words, mention, mention + 1, ShippedResources().lexicon);
      words.insert(words.begin() + hit, "not");
      PolarityResult flipped =
          Score(words, mention + 1, mention + 2, ShippedResources().lexicon);
      ASSERT_NE(plain.score, 0.0) << term;
      ASSERT_EQ(flipped.score, -plain.score) << term;
    } else {
      words = {"Trump", "said"};
      mention = 0;
      for (std::size_t i = 0; i < gap; ++i) words.push_back("the");
      words.push_back("the");
      hit = words.size();
      words.push_back(term);
      PolarityResult plain =
          Score(words, mention, mention + 1, ShippedResources().lexicon);
      words[hit - 1] = "not";
      PolarityResult flipped =
          Score(words, mention, mention + 1, ShippedResources().lexicon);
      ASSERT_NE(plain.score, 0.0) << term;
      ASSERT_EQ(flipped.score, -plain.score) << term;
    }
  }
}

// Property: reversing the lexicon negates every score and swaps the labels.
TEST_F(LexiconOracleTest, LexiconSymmetry) {
  Lexicon reversed = ShippedResources().lexicon.Reversed();
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    testing::GeneratedSentence s =
        testing::RandomScoringSentence(rng, *terms_, 15);
    PolarityResult a = Score(s.words, s.mention_first, s.mention_last,
                             ShippedResources().lexicon);
    PolarityResult b =
        Score(s.words, s.mention_first, s.mention_last, reversed);
    ASSERT_EQ(b.score, -a.score);
    ASSERT_EQ(b.confidence, a.confidence);
    if (a.label == PolarityLabel::kNeutral) {
      ASSERT_EQ(b.label, PolarityLabel::kNeutral);
    } else {
      ASSERT_NE(b.label, a.label);
      ASSERT_NE(b.label, PolarityLabel::kNeutral);
    }
  }
}

// Property: scores stay in [-1, 1] and labels agree with the band.
TEST_F(LexiconOracleTest, Boundedness) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    testing::GeneratedSentence s =
        testing::RandomScoringSentence(rng, *terms_, 15);
    AnalysisParams params;
    params.neutral_band = (rng() % 50) / 100.0;
    PolarityResult r = Score(s.words, s.mention_first, s.mention_last,
                             ShippedResources().lexicon, params);
    ASSERT_GE(r.score, -1.0);
    ASSERT_LE(r.score, 1.0);
    ASSERT_GE(r.confidence, 0.0);
    ASSERT_LE(r.confidence, 1.0);
    ASSERT_EQ(r.label, LabelForScore(r.score, params.neutral_band));
  }
}

// Property: scores depend only on the mention's own sentence.
TEST(ScoreTopicTest, LocalityAcrossSentences) {
  const auto score_first = [](const std::string &body) {
    Article article;
    article.article_id = "0123456789abcdef";
    article.body = body;
    std::vector<ProcessedArticle> docs =
        PreprocessTopic({article}, ShippedResources().preprocess);
    auto results = ScoreTopic(docs, ShippedResources().lexicon,
                              AnalysisParams(), ScorerChoice());
    return results.at(docs[0].mentions.at(0).mention_id);
  };
  PolarityResult base =
      score_first("Critics said Trump failed badly. The weather was fine.");
  for (const char *other :
       {"Critics said Trump failed badly. Everyone loved the wonderful plan.",
        "Critics said Trump failed badly. It was a disaster and a catastrophe.",
        "Critics said Trump failed badly.\nTrump was never praised."}) {
    EXPECT_EQ(score_first(other), base) << other;
  }
  EXPECT_LT(base.score, 0.0);
}

TEST(ScoreTopicTest, EveryMentionScoredOnce) {
  std::vector<Article> articles = testing::FixtureArticles("iran-deal");
  std::vector<ProcessedArticle> docs =
      PreprocessTopic(articles, ShippedResources().preprocess);
  auto results = ScoreTopic(docs, ShippedResources().lexicon, AnalysisParams(),
                            ScorerChoice());
  std::size_t mentions = 0;
  for (const ProcessedArticle &doc : docs) {
    for (const Mention &m : doc.mentions) {
      ++mentions;
      ASSERT_EQ(results.count(m.mention_id), 1u);
      EXPECT_EQ(results.at(m.mention_id).mention_id, m.mention_id);
    }
  }
  EXPECT_EQ(results.size(), mentions);
  EXPECT_EQ(ScoreTopic(docs, ShippedResources().lexicon, AnalysisParams(),
                       ScorerChoice()),
            results);
}

TEST(RemoteScorerTest, RequestBodyUsesScalarOffsets) {
  auto body = nlohmann::json::parse(
      RemoteRequestBody("Jos\xC3\xA9 praised it", Span{0, 4}));
  EXPECT_EQ(body["text"], "Jos\xC3\xA9 praised it");
  EXPECT_EQ(body["target_start"], 0);
  EXPECT_EQ(body["target_end"], 4);
}

TEST(RemoteScorerTest, ParseResponseValidates) {
  PolarityResult r = ParseRemoteResponse(
      R"({"score": 0.9, "label": "positive", "confidence": 0.8})", "m", 0.1);
  EXPECT_EQ(r.score, 0.9);
  EXPECT_EQ(r.label, PolarityLabel::kPositive);
  EXPECT_EQ(r.confidence, 0.8);
  EXPECT_EQ(r.scorer, "remote");
  EXPECT_EQ(r.mention_id, "m");
  for (const char *bad : {
           R"({"score": -0.7, "label": "positive", "confidence": 0.8})",
           R"({"score": 0.05, "label": "positive", "confidence": 0.8})",
           R"({"score": 1.5, "label": "positive", "confidence": 0.8})",
           R"({"score": 0.5, "label": "positive", "confidence": 1.2})",
           R"({"score": 0.5, "label": "great", "confidence": 0.2})",
           R"({"score": "0.5", "label": "positive", "confidence": 0.2})",
           R"({"label": "positive", "confidence": 0.2})", R"([0.5])",
           "not json"}) {
    EXPECT_EQ(ThrownCode([&] { ParseRemoteResponse(bad, "m", 0.1); }),
              ErrorCode::kValidation)
        << bad;
  }
}

struct RemoteScene {
  std::u32string body = U"Critics said Trump failed badly.";
  Sentence sentence;
  std::vector<Token> tokens;
  Mention mention;

  RemoteScene() {
    sentence.span = {0, body.size()};
    tokens = Tokenize(body, sentence.span,
                      ShippedResources().preprocess.abbreviations);
    mention.mention_id = "0123456789abcdef-m00000";
    mention.span = {13, 18};
  }

  PolarityResult Run(const RemoteScorerOptions &options) const {
    return ScoreRemote(body, sentence, tokens, mention, options,
                       ShippedResources().lexicon, AnalysisParams());
  }

  PolarityResult Lexical() const {
    return ScoreLexicon(tokens, sentence.span, mention,
                        ShippedResources().lexicon, AnalysisParams());
  }
};

TEST(RemoteScorerTest, ValidResponsePassesThrough) {
  StubScorer stub(StubScorer::Mode::kValid);
  stub.Start();
  RemoteScene scene;
  PolarityResult r = scene.Run({stub.endpoint()});
  EXPECT_EQ(r, (PolarityResult{scene.mention.mention_id, 0.9,
                               PolarityLabel::kPositive, 0.8, "remote"}));
  ASSERT_EQ(stub.request_count(), 1);
  auto request = nlohmann::json::parse(stub.requests()[0]);
  EXPECT_EQ(request["text"], "Critics said Trump failed badly.");
  EXPECT_EQ(request["target_start"], 13);
  EXPECT_EQ(request["target_end"], 18);
}

TEST(RemoteScorerTest, InvalidResponsesFallBackToLexicon) {
  RemoteScene scene;
  PolarityResult expected = scene.Lexical();
  expected.scorer = "lexicon-fallback";
  for (StubScorer::Mode mode :
       {StubScorer::Mode::kInconsistent, StubScorer::Mode::kMalformed,
        StubScorer::Mode::kServerError}) {
    StubScorer stub(mode);
    stub.Start();
    EXPECT_EQ(scene.Run({stub.endpoint()}), expected);
    EXPECT_EQ(stub.request_count(), 1);
  }
}

TEST(RemoteScorerTest, HangTimesOutIntoFallback) {
  StubScorer stub(StubScorer::Mode::kHang);
  stub.Start();
  RemoteScene scene;
  RemoteScorerOptions options{stub.endpoint(), std::chrono::milliseconds(300)};
  auto start = std::chrono::steady_clock::now();
  PolarityResult r = scene.Run(options);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(3));
  EXPECT_EQ(r.scorer, "lexicon-fallback");
  EXPECT_EQ(r.score, scene.Lexical().score);
  stub.Stop();
}

TEST(RemoteScorerTest, UnreachableEndpointFallsBack) {
  RemoteScene scene;
  PolarityResult r = scene.Run({"http://127.0.0.1:1/score"});
  EXPECT_EQ(r.scorer, "lexicon-fallback");
}

TEST(RemoteScorerTest, DefaultTimeoutIsTenSeconds) {
  EXPECT_EQ(RemoteScorerOptions().timeout, std::chrono::seconds(10));
  EXPECT_EQ(RemoteScorerOptions().concurrency, 4);
}

TEST(RemoteScorerTest, TopicScoringUsesBoundedConcurrency) {
  StubScorer stub(StubScorer::Mode::kValid);
  stub.Start();
  std::vector<ProcessedArticle> docs = PreprocessTopic(
      testing::FixtureArticles("greenfield-budget"),
      ShippedResources().preprocess);
  ScorerChoice choice;
  choice.kind = ScorerChoice::Kind::kRemote;
  choice.remote.endpoint = stub.endpoint();
  choice.remote.concurrency = 3;
  auto results =
      ScoreTopic(docs, ShippedResources().lexicon, AnalysisParams(), choice);
  std::size_t mentions = 0;
  for (const ProcessedArticle &doc : docs) mentions += doc.mentions.size();
  EXPECT_EQ(results.size(), mentions);
  EXPECT_EQ(stub.request_count(), static_cast<int>(mentions));
  for (const auto &[id, r] : results) EXPECT_EQ(r.scorer, "remote");
}

}  // namespace
}  // namespace newsalyze

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
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "newsalyze/concepts/concepts.h"
#include "oracles.h"
#include "test_util.h"

namespace newsalyze {
namespace {

using ::testing::ElementsAre;
using testing::ShippedResources;

const ConceptResources &Resources() { return ShippedResources().concepts; }

std::string Norm(const std::string &surface) {
  return Normalize(surface, Resources().honorifics);
}

// Mentions with the given surfaces, all in one article, in order.
std::vector<Mention> MentionsOf(const std::vector<std::string> &surfaces,
                                const std::string &article = "aaaaaaaaaaaaaaaa") {
  std::vector<Mention> mentions;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    Mention m;
    m.article_id = article;
    m.mention_id = MakeMentionId(article, i);
    m.surface = surfaces[i];
    m.head = surfaces[i].substr(surfaces[i].find_last_of(' ') + 1);
    mentions.push_back(m);
  }
  return mentions;
}

std::vector<Concept> Merge(const std::vector<Mention> &mentions,
                           double threshold = 0.85) {
  AnalysisParams params;
  params.merge_threshold = threshold;
  return MergeMentions(mentions, Resources(), params);
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(Norm("President Donald Trump's"), "donald trump");
  EXPECT_EQ(Norm("trump"), "trump");
  EXPECT_EQ(Norm("The United States"), "united states");
}

TEST(NormalizeTest, NeverStripsTheLastWord) {
  EXPECT_EQ(Norm("President"), "president");
  EXPECT_EQ(Norm("The"), "the");
  EXPECT_EQ(Norm("Mr. Trump"), "trump");
  EXPECT_EQ(Norm("  Angela   Merkel  "), "angela merkel");
  EXPECT_EQ(Norm("Trump\xE2\x80\x99s"), "trump");
}

TEST(NormalizeTest, IsIdempotent) {
  for (const char *surface :
       {"President Donald Trump's", "The United States", "Mr. Trump",
        "Secretary of State Mike Pompeo", "the President", "E.U."}) {
    EXPECT_EQ(Norm(Norm(surface)), Norm(surface)) << surface;
  }
}

TEST(EditSimilarityTest, Examples) {
  EXPECT_EQ(EditDistance(U"iran", U"iraq"), 1u);
  EXPECT_DOUBLE_EQ(EditSimilarity("iran", "iraq"), 0.75);
  EXPECT_EQ(EditDistance(U"kitten", U"sitting"), 3u);
  EXPECT_DOUBLE_EQ(EditSimilarity("", ""), 1.0);
  EXPECT_DOUBLE_EQ(EditSimilarity("abc", ""), 0.0);
  // Counts scalar values, not bytes.
  EXPECT_EQ(EditDistance(U"café", U"cafe"), 1u);
  EXPECT_DOUBLE_EQ(EditSimilarity("caf\xC3\xA9", "cafe"), 0.75);
}

TEST(InitialismTest, Examples) {
  EXPECT_EQ(Initialism("United States", false), "US");
  EXPECT_EQ(Initialism("International Atomic Energy Agency", true), "IAEA");
  EXPECT_EQ(Initialism("Department of State", false), "DOS");
  EXPECT_EQ(Initialism("Department of State", true), "DS");
}

TEST(CanonicalSurfaceTest, MajorityThenLengthThenLexicographic) {
  EXPECT_EQ(CanonicalSurface({"Donald Trump", "Donald Trump", "Trump", "Trump",
                              "Trump", "President Trump"}),
            "Trump");
  EXPECT_EQ(CanonicalSurface({"Donald Trump", "Trump", "President Trump"}),
            "President Trump");
  EXPECT_EQ(CanonicalSurface({"Bb", "Aa"}), "Aa");
}

TEST(MergeTest, TrumpVariantsFormOneConcept) {
  std::vector<Concept> concepts =
      Merge(MentionsOf({"Donald Trump", "Trump", "Trump", "President Trump",
                        "Donald Trump", "Trump"}));
  ASSERT_EQ(concepts.size(), 1u);
  EXPECT_EQ(concepts[0].canonical_label, "Trump");
  EXPECT_EQ(concepts[0].frequency, 6);
  EXPECT_EQ(concepts[0].concept_id, "c1");
}

TEST(MergeTest, AbbreviationPass) {
  std::vector<Concept> concepts = Merge(MentionsOf({"U.S.", "United States"}));
  ASSERT_EQ(concepts.size(), 1u);
  EXPECT_EQ(concepts[0].frequency, 2);
  concepts = Merge(MentionsOf(
      {"IAEA", "International Atomic Energy Agency"}));
  EXPECT_EQ(concepts.size(), 1u);
}

TEST(MergeTest, IranAndIraqStaySeparate) {
  std::vector<Concept> concepts = Merge(MentionsOf({"Iran", "Iraq"}), 0.85);
  EXPECT_EQ(concepts.size(), 2u);
  // At a threshold at or below their similarity they merge.
  EXPECT_EQ(Merge(MentionsOf({"Iran", "Iraq"}), 0.75).size(), 1u);
}

TEST(MergeTest, AmbiguousHeadsDoNotMerge) {
  std::vector<Concept> concepts =
      Merge(MentionsOf({"State Department", "Defense Department",
                        "Justice Department"}));
  EXPECT_EQ(concepts.size(), 3u);
  concepts = Merge(MentionsOf({"Angela Merkel", "Merkel", "Chancellor Merkel"}));
  EXPECT_EQ(concepts.size(), 1u);
}

TEST(MergeTest, EmptyInput) { EXPECT_TRUE(Merge({}).empty()); }

TEST(MergeTest, PerArticleBookkeeping) {
  std::vector<Mention> mentions = MentionsOf({"Trump", "Iran"}, "aaaaaaaaaaaaaaaa");
  std::vector<Mention> more = MentionsOf({"Trump", "Trump"}, "bbbbbbbbbbbbbbbb");
  mentions.insert(mentions.end(), more.begin(), more.end());
  std::vector<Concept> concepts = Merge(mentions);
  ASSERT_EQ(concepts.size(), 2u);
  EXPECT_EQ(concepts[0].canonical_label, "Trump");
  EXPECT_EQ(concepts[0].per_article_frequency,
            (std::map<std::string, int>{{"aaaaaaaaaaaaaaaa", 1},
                                        {"bbbbbbbbbbbbbbbb", 2}}));
  EXPECT_THAT(concepts[0].members,
              ElementsAre("aaaaaaaaaaaaaaaa-m00000", "bbbbbbbbbbbbbbbb-m00000",
                          "bbbbbbbbbbbbbbbb-m00001"));
  EXPECT_EQ(concepts[1].concept_id, "c2");
}

Concept MakeConcept(const std::string &label, int frequency, int articles) {
  Concept c;
  c.canonical_label = label;
  c.frequency = frequency;
  for (int i = 0; i < articles; ++i) {
    c.per_article_frequency["a" + std::to_string(i)] =
        i == 0 ? frequency - articles + 1 : 1;
  }
  return c;
}

TEST(RankTest, FrequencyThenSpreadThenLabel) {
  // Frequencies [9, 4, 4, 1]: the two 4s are ordered by article spread
  // (3 articles before 1), so k = 3 keeps A, C, B.
  std::vector<Concept> concepts = {MakeConcept("B", 4, 1),
                                   MakeConcept("D", 1, 1),
                                   MakeConcept("A", 9, 2),
                                   MakeConcept("C", 4, 3)};
  std::vector<Concept> top = Rank(concepts, 3);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0].canonical_label, "A");
  EXPECT_EQ(top[1].canonical_label, "C");
  EXPECT_EQ(top[2].canonical_label, "B");
  EXPECT_EQ(Rank(concepts, 10).size(), 4u);
  EXPECT_TRUE(Rank({}, 3).empty());
  // Equal frequency and spread fall back to the label.
  top = Rank({MakeConcept("Zeta", 2, 1), MakeConcept("Alpha", 2, 1)}, 2);
  EXPECT_EQ(top[0].canonical_label, "Alpha");
}

class MergeOracleTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    honorifics_ = new std::set<std::string>(
        testing::ReadWordSet(testing::DataDir() / "honorifics.txt"));
    ambiguous_ = new std::set<std::string>(
        testing::ReadWordSet(testing::DataDir() / "ambiguous_heads.txt"));
  }

  static std::set<std::string> *honorifics_;
  static std::set<std::string> *ambiguous_;
};

std::set<std::string> *MergeOracleTest::honorifics_ = nullptr;
std::set<std::string> *MergeOracleTest::ambiguous_ = nullptr;

void ExpectMatchesOracle(const std::vector<Concept> &actual,
                         const std::vector<testing::OracleConcept> &expected) {
  ASSERT_EQ(actual.size(), expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    EXPECT_EQ(actual[i].members, expected[i].members) << "rank " << i;
    EXPECT_EQ(actual[i].canonical_label, expected[i].canonical_label);
    EXPECT_EQ(actual[i].frequency, expected[i].frequency);
    EXPECT_EQ(actual[i].per_article_frequency.size(),
              expected[i].article_count);
    EXPECT_EQ(actual[i].concept_id, "c" + std::to_string(i + 1));
  }
}

TEST_F(MergeOracleTest, RandomSetsMatchPairwiseClosure) {
  std::mt19937 rng(424242);
  const double thresholds[] = {0.6, 0.75, 0.8, 0.85, 0.9, 1.0};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Mention> mentions = testing::RandomMentionSet(rng, 12);
    double threshold = thresholds[rng() % 6];
    SCOPED_TRACE("trial " + std::to_string(trial));
    ExpectMatchesOracle(
        Merge(mentions, threshold),
        testing::MergeOracle(mentions, *honorifics_, *ambiguous_, threshold));
    if (HasFatalFailure()) return;
  }
}

// Property: the output is a partition of the input.
TEST_F(MergeOracleTest, OutputPartitionsInput) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Mention> mentions = testing::RandomMentionSet(rng, 30);
    std::vector<std::string> all;
    int total = 0;
    for (const Concept &c : Merge(mentions)) {
      ASSERT_FALSE(c.members.empty());
      all.insert(all.end(), c.members.begin(), c.members.end());
      int per_article = 0;
      for (const auto &[a, n] : c.per_article_frequency) per_article += n;
      ASSERT_EQ(per_article, c.frequency);
      ASSERT_EQ(static_cast<int>(c.members.size()), c.frequency);
      total += c.frequency;
    }
    std::vector<std::string> input;
    for (const Mention &m : mentions) input.push_back(m.mention_id);
    std::sort(all.begin(), all.end());
    std::sort(input.begin(), input.end());
    ASSERT_EQ(all, input);
    ASSERT_EQ(total, static_cast<int>(mentions.size()));
  }
}

TEST_F(MergeOracleTest, PermutationInvariant) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Mention> mentions = testing::RandomMentionSet(rng, 12);
    std::vector<Concept> reference = Merge(mentions);
    for (int shuffle = 0; shuffle < 20; ++shuffle) {
      std::shuffle(mentions.begin(), mentions.end(), rng);
      ASSERT_EQ(Merge(mentions), reference);
    }
  }
}

// Property: raising the threshold only splits clusters.
TEST_F(MergeOracleTest, HigherThresholdRefinesPartition) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Mention> mentions = testing::RandomMentionSet(rng, 20);
    std::map<std::string, std::string> coarse;
    for (const Concept &c : Merge(mentions, 0.6)) {
      for (const std::string &m : c.members) coarse[m] = c.concept_id;
    }
    for (double threshold : {0.7, 0.8, 0.9, 1.0}) {
      for (const Concept &c : Merge(mentions, threshold)) {
        for (const std::string &m : c.members) {
          ASSERT_EQ(coarse[m], coarse[c.members.front()])
              << "threshold " << threshold << " merged across coarse clusters";
        }
      }
    }
  }
}

}  // namespace
}  // namespace newsalyze

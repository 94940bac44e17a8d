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

#ifndef NEWSALYZE_STORE_TYPES_H_
#define NEWSALYZE_STORE_TYPES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Domain types shared by every pipeline stage and the server. Character
// offsets count Unicode scalar values of the article body; end is exclusive.

namespace newsalyze {

inline constexpr char kEngineVersion[] = "newsalyze-engine/1.0";

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool Contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span &other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const Span &) const = default;
};

struct AnalysisParams {
  int top_k_concepts = 6;
  double merge_threshold = 0.85;
  int negation_window = 3;
  double neutral_band = 0.1;
  // Lets tokens inside the scored mention contribute sentiment.
  bool include_self_tokens = false;

  // Throws Error(kValidation) when a field is out of range.
  void Validate() const;

  bool operator==(const AnalysisParams &) const = default;
};

struct Source {
  std::string outlet_name;
  std::string url;

  bool operator==(const Source &) const = default;
};

struct TopicConfig {
  std::string topic_id;
  std::string title;
  std::vector<Source> sources;
  AnalysisParams analysis_params;

  void Validate() const;

  bool operator==(const TopicConfig &) const = default;
};

struct Article {
  std::string article_id;
  std::string topic_id;
  std::string outlet;
  std::string url;
  std::string title;
  std::optional<std::string> published;
  std::string body;
  std::string fetched_at;

  bool operator==(const Article &) const = default;
};

// First 16 hex characters of SHA-256(url + "\n" + body).
std::string ComputeArticleId(std::string_view url, std::string_view body);

// True for slugs matching [a-z0-9-]+.
bool IsValidTopicId(std::string_view topic_id);

// True for absolute URLs of the form scheme://host[...].
bool IsValidAbsoluteUrl(std::string_view url);

struct Sentence {
  std::string article_id;
  int index = 0;
  Span span;

  bool operator==(const Sentence &) const = default;
};

struct Token {
  int index = 0;
  Span span;
  std::string surface;
  bool is_capitalized = false;
  bool is_sentence_initial = false;

  bool operator==(const Token &) const = default;
};

enum class MentionKind { kPerson, kOrg, kPlace, kOther };

const char *MentionKindName(MentionKind kind);
MentionKind ParseMentionKind(std::string_view name);

struct Mention {
  std::string mention_id;
  std::string article_id;
  int sentence_index = 0;
  Span span;
  std::string surface;
  std::string head;
  MentionKind kind = MentionKind::kOther;

  bool operator==(const Mention &) const = default;
};

struct Concept {
  std::string concept_id;
  std::string canonical_label;
  std::vector<std::string> members;
  int frequency = 0;
  std::map<std::string, int> per_article_frequency;

  bool operator==(const Concept &) const = default;
};

enum class PolarityLabel { kNegative, kNeutral, kPositive };

const char *PolarityLabelName(PolarityLabel label);
PolarityLabel ParsePolarityLabel(std::string_view name);

// Label implied by a score under the neutral band.
PolarityLabel LabelForScore(double score, double neutral_band);

struct PolarityResult {
  std::string mention_id;
  double score = 0.0;
  PolarityLabel label = PolarityLabel::kNeutral;
  double confidence = 0.0;
  std::string scorer;

  bool operator==(const PolarityResult &) const = default;
};

enum class ColorClass {
  kStrongNegative,
  kNegative,
  kNeutral,
  kPositive,
  kStrongPositive,
};

const char *ColorClassName(ColorClass color);
ColorClass ParseColorClass(std::string_view name);

// Five-way bucketing of a polarity value: <= -0.5, (-0.5, -band),
// [-band, +band], (+band, 0.5), >= 0.5.
ColorClass ColorClassFor(double polarity, double neutral_band);

struct Bar {
  std::string concept_id;
  int count = 0;
  double height = 0.0;
  double mean_polarity = 0.0;
  ColorClass color_class = ColorClass::kNeutral;

  bool operator==(const Bar &) const = default;
};

struct FramingHistogram {
  std::string article_id;
  std::vector<std::string> concept_order;
  std::vector<Bar> bars;

  bool operator==(const FramingHistogram &) const = default;
};

struct ScoredMention {
  Mention mention;
  PolarityResult polarity;

  bool operator==(const ScoredMention &) const = default;
};

struct AnalysisBundle {
  std::string topic_id;
  // All concepts of the topic in rank order; the first top_k are the
  // histogram axis.
  std::vector<Concept> concepts;
  std::map<std::string, std::vector<ScoredMention>> mentions_by_article;
  std::map<std::string, FramingHistogram> histograms;
  AnalysisParams params_used;
  std::string engine_version;

  // The leading min(top_k, |concepts|) concepts.
  std::vector<Concept> TopConcepts() const;

  bool operator==(const AnalysisBundle &) const = default;
};

}  // namespace newsalyze

#endif  // NEWSALYZE_STORE_TYPES_H_

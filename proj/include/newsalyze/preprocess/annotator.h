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

#ifndef NEWSALYZE_PREPROCESS_ANNOTATOR_H_
#define NEWSALYZE_PREPROCESS_ANNOTATOR_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "newsalyze/preprocess/resources.h"
#include "newsalyze/store/types.h"

// Rule-based sentence segmentation, tokenization and candidate-mention
// detection. All spans are scalar-value offsets into the article body.

namespace newsalyze {

// Splits a body into sentences. A sentence ends at '.', '!' or '?' (plus any
// closing quotes or brackets) when followed by whitespace and an uppercase
// letter, digit or opening quote, unless the word before a '.' is a known
// abbreviation. Line breaks always end a sentence. Sentence spans exclude
// surrounding whitespace. Returned sentences have an empty article_id.
std::vector<Sentence> Segment(std::u32string_view body,
                              const WordList &abbreviations);

// Tokenizes text[span]. Whitespace separates tokens; leading and trailing
// punctuation becomes single-character tokens, except that the final period
// of a known abbreviation or an initialism ("U.S.") stays attached.
// Token spans are offsets into `text`.
std::vector<Token> Tokenize(std::u32string_view text, Span span,
                            const WordList &abbreviations);

// Convenience form over a standalone string.
std::vector<Token> Tokenize(std::u32string_view text,
                            const WordList &abbreviations);

// Surfaces of capitalized tokens that occur in a non-sentence-initial
// position, with any possessive suffix removed.
void CollectRecurrentSurfaces(const std::vector<Token> &tokens,
                              std::set<std::string> *surfaces);

// Detects candidate mentions in one sentence: maximal runs of capitalized
// tokens, optionally joined by "of", "the" or "for". A run starting at the
// sentence-initial token keeps that token only if the run or the token is
// in the gazetteer or the token recurs capitalized mid-sentence elsewhere
// in the topic. Possessive "'s" is trimmed from the span. Pronouns never
// form mentions. Returned mentions carry span, surface, head and kind.
std::vector<Mention> DetectMentions(const std::vector<Token> &tokens,
                                    std::u32string_view body,
                                    const Gazetteer &gazetteer,
                                    const std::set<std::string> &recurrent);

// Preprocessed article: decoded body, sentences, per-sentence tokens and
// mentions with ids assigned.
struct ProcessedArticle {
  std::string article_id;
  std::u32string body;
  std::vector<Sentence> sentences;
  std::vector<std::vector<Token>> tokens;
  std::vector<Mention> mentions;
};

struct PreprocessResources {
  WordList abbreviations;
  Gazetteer gazetteer;
};

// Mention id: "<article_id>-m<5-digit index>".
std::string MakeMentionId(const std::string &article_id, std::size_t index);

// Segments and tokenizes one article. Mentions are left empty.
ProcessedArticle SegmentAndTokenize(const Article &article,
                                    const PreprocessResources &resources);

// Runs the full rule-based annotator over a topic. Recurrence for
// sentence-initial tokens is evaluated across all articles of the topic.
std::vector<ProcessedArticle> PreprocessTopic(
    const std::vector<Article> &articles,
    const PreprocessResources &resources);

}  // namespace newsalyze

#endif  // NEWSALYZE_PREPROCESS_ANNOTATOR_H_

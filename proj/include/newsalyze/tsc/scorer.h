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

#ifndef NEWSALYZE_TSC_SCORER_H_
#define NEWSALYZE_TSC_SCORER_H_

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newsalyze/preprocess/annotator.h"
#include "newsalyze/store/types.h"
#include "newsalyze/tsc/lexicon.h"

// Target-dependent sentiment: how a sentence portrays one mention in it.

namespace newsalyze {

inline constexpr char kLexiconScorer[] = "lexicon";
inline constexpr char kRemoteScorer[] = "remote";
inline constexpr char kLexiconFallbackScorer[] = "lexicon-fallback";

// not, n't, no, never, without (lowercase); any token ending in "n't"
// ("didn't") also negates.
bool IsNegator(std::string_view lowercase_token);

// Lexicon scorer. Every lexicon hit on a token outside the mention
// contributes polarity * 1 / (1 + d), where d is the token distance to the
// nearest mention token; a hit is sign-flipped when a negator occurs within
// negation_window tokens before it. score = clamp(sum, -1, 1),
// confidence = min(1, hits / 3). Throws Error(kContract) if the mention is
// not inside the sentence.
PolarityResult ScoreLexicon(const std::vector<Token> &sentence_tokens,
                            const Span &sentence_span, const Mention &mention,
                            const Lexicon &lexicon,
                            const AnalysisParams &params);

struct RemoteScorerOptions {
  std::string endpoint;
  std::chrono::milliseconds timeout{10000};
  // Requests in flight when scoring a topic.
  int concurrency = 4;
};

// Request body for the remote scorer; offsets are scalar values into text.
std::string RemoteRequestBody(std::string_view sentence_text,
                              const Span &target);

// Validates a response body {"score", "label", "confidence"} and returns it
// as a result attributed to the remote scorer. Throws Error(kValidation)
// when fields are missing, out of range, or the label disagrees with the
// score under the neutral band.
PolarityResult ParseRemoteResponse(std::string_view body,
                                   const std::string &mention_id,
                                   double neutral_band);

// One remote call. Returns nullopt on transport failure, non-2xx status or
// an invalid response; the reason goes to *error when given.
std::optional<PolarityResult> TryScoreRemote(
    std::string_view sentence_text, const Span &target,
    const std::string &mention_id, const RemoteScorerOptions &options,
    double neutral_band, std::string *error = nullptr);

// Remote scoring with per-mention fallback to the lexicon scorer, which is
// then recorded as "lexicon-fallback".
PolarityResult ScoreRemote(const std::u32string &body,
                           const Sentence &sentence,
                           const std::vector<Token> &sentence_tokens,
                           const Mention &mention,
                           const RemoteScorerOptions &options,
                           const Lexicon &lexicon,
                           const AnalysisParams &params);

struct ScorerChoice {
  enum class Kind { kLexicon, kRemote };

  Kind kind = Kind::kLexicon;
  RemoteScorerOptions remote;
};

// Scores every mention of every article exactly once.
std::map<std::string, PolarityResult> ScoreTopic(
    const std::vector<ProcessedArticle> &articles, const Lexicon &lexicon,
    const AnalysisParams &params, const ScorerChoice &choice);

}  // namespace newsalyze

#endif  // NEWSALYZE_TSC_SCORER_H_

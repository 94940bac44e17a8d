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

#ifndef NEWSALYZE_AGGREGATE_AGGREGATE_H_
#define NEWSALYZE_AGGREGATE_AGGREGATE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "newsalyze/store/types.h"

namespace newsalyze {

// Builds one framing histogram per article over the topic's top concepts.
// All histograms share the concept order and the height denominator (the
// largest per-article count of any top concept in the topic), so they are
// directly comparable. Bar color buckets the mean mention score of the
// concept within the article. Throws Error(kContract) if a mention of a top
// concept has no polarity result.
std::map<std::string, FramingHistogram> BuildHistograms(
    const std::vector<std::string> &article_ids,
    const std::vector<Concept> &top_concepts,
    const std::map<std::string, PolarityResult> &polarity,
    const AnalysisParams &params);

inline constexpr std::size_t kSnippetLength = 200;

// Leading text of a body: the whole body (line breaks as spaces) if it has
// at most `limit` characters, otherwise the first `limit` characters cut
// back to the last word boundary.
std::string MakeSnippet(const std::string &body,
                        std::size_t limit = kSnippetLength);

struct OverviewEntry {
  std::string article_id;
  std::string outlet;
  std::string title;
  std::string url;
  std::optional<std::string> published;
  std::string snippet;
  FramingHistogram histogram;
};

// Overview rows ordered by outlet name, then article id. Articles without a
// histogram in the bundle are skipped.
std::vector<OverviewEntry> BuildOverview(const std::vector<Article> &articles,
                                         const AnalysisBundle &bundle);

}  // namespace newsalyze

#endif  // NEWSALYZE_AGGREGATE_AGGREGATE_H_

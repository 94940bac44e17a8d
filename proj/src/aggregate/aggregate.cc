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

#include "newsalyze/aggregate/aggregate.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "newsalyze/base/errors.h"
#include "newsalyze/base/utf8.h"

namespace newsalyze {

std::map<std::string, FramingHistogram> BuildHistograms(
    const std::vector<std::string> &article_ids,
    const std::vector<Concept> &top_concepts,
    const std::map<std::string, PolarityResult> &polarity,
    const AnalysisParams &params) {
  std::vector<std::string> order;
  for (const Concept &c : top_concepts) order.push_back(c.concept_id);

  // Per (concept, article): member scores in mention-id order.
  std::vector<std::map<std::string, std::vector<double>>> scores(
      top_concepts.size());
  int max_count = 0;
  for (std::size_t c = 0; c < top_concepts.size(); ++c) {
    for (const std::string &member : top_concepts[c].members) {
      auto it = polarity.find(member);
      if (it == polarity.end()) {
        throw Error(ErrorCode::kContract,
                    "mention " + member + " has no polarity result");
      }
      // Mention ids are "<article_id>-m<index>".
      std::string article_id = member.substr(0, member.rfind("-m"));
      scores[c][article_id].push_back(it->second.score);
    }
    for (const auto &[article_id, count] :
         top_concepts[c].per_article_frequency) {
      max_count = std::max(max_count, count);
    }
  }

  std::map<std::string, FramingHistogram> histograms;
  for (const std::string &article_id : article_ids) {
    FramingHistogram histogram;
    histogram.article_id = article_id;
    histogram.concept_order = order;
    for (std::size_t c = 0; c < top_concepts.size(); ++c) {
      Bar bar;
      bar.concept_id = top_concepts[c].concept_id;
      auto it = scores[c].find(article_id);
      if (it != scores[c].end() && !it->second.empty()) {
        const std::vector<double> &values = it->second;
        double sum = 0.0;
        for (double v : values) sum += v;
        bar.count = static_cast<int>(values.size());
        bar.height = static_cast<double>(bar.count) / max_count;
        bar.mean_polarity = std::clamp(sum / values.size(), -1.0, 1.0);
        bar.color_class = ColorClassFor(bar.mean_polarity, params.neutral_band);
      }
      histogram.bars.push_back(bar);
    }
    histograms.emplace(article_id, std::move(histogram));
  }
  return histograms;
}

std::string MakeSnippet(const std::string &body, std::size_t limit) {
  std::u32string text = Utf8Decode(body);
  for (char32_t &ch : text) {
    if (ch == '\n') ch = ' ';
  }
  if (text.size() <= limit) return Utf8Encode(text);
  std::size_t cut = limit;
  if (!IsSpace(text[cut])) {
    while (cut > 0 && !IsSpace(text[cut - 1])) --cut;
    // A single word longer than the limit is cut mid-word.
    if (cut == 0) cut = limit;
  }
  while (cut > 0 && IsSpace(text[cut - 1])) --cut;
  return Utf8Encode(std::u32string_view(text).substr(0, cut));
}

std::vector<OverviewEntry> BuildOverview(const std::vector<Article> &articles,
                                         const AnalysisBundle &bundle) {
  std::vector<OverviewEntry> entries;
  for (const Article &article : articles) {
    auto it = bundle.histograms.find(article.article_id);
    if (it == bundle.histograms.end()) continue;
    OverviewEntry entry;
    entry.article_id = article.article_id;
    entry.outlet = article.outlet;
    entry.title = article.title;
    entry.url = article.url;
    entry.published = article.published;
    entry.snippet = MakeSnippet(article.body);
    entry.histogram = it->second;
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const OverviewEntry &a, const OverviewEntry &b) {
              return std::tie(a.outlet, a.article_id) <
                     std::tie(b.outlet, b.article_id);
            });
  return entries;
}

}  // namespace newsalyze

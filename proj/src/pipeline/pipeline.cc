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

#include "newsalyze/pipeline/pipeline.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "newsalyze/aggregate/aggregate.h"
#include "newsalyze/base/errors.h"
#include "newsalyze/ingest/extractor.h"

#ifndef NEWSALYZE_DATA_DIR
#define NEWSALYZE_DATA_DIR "data"
#endif

namespace newsalyze {

Resources Resources::Load(const std::filesystem::path &data_dir) {
  Resources resources;
  resources.preprocess.abbreviations =
      WordList::Load(data_dir / "abbreviations.txt");
  resources.preprocess.gazetteer = Gazetteer::Load(data_dir / "gazetteer.tsv");
  resources.concepts.honorifics = WordList::Load(data_dir / "honorifics.txt");
  resources.concepts.ambiguous_heads =
      WordList::Load(data_dir / "ambiguous_heads.txt");
  resources.lexicon = Lexicon::Load(data_dir / "lexicon.tsv");
  return resources;
}

std::filesystem::path DefaultDataDir() {
  if (const char *env = std::getenv("NEWSALYZE_DATA"); env && *env) return env;
  return NEWSALYZE_DATA_DIR;
}

int IngestReport::stored() const {
  return static_cast<int>(std::count_if(
      outcomes.begin(), outcomes.end(),
      [](const UrlOutcome &outcome) { return outcome.ok; }));
}

int IngestReport::created() const {
  return static_cast<int>(std::count_if(
      outcomes.begin(), outcomes.end(),
      [](const UrlOutcome &outcome) { return outcome.ok && outcome.is_new; }));
}

IngestReport IngestTopic(Store &store, const TopicConfig &config,
                         const FetchOptions &fetch_options, int concurrency) {
  config.Validate();
  store.PutTopicConfig(config);

  const std::size_t n = config.sources.size();
  std::vector<std::optional<Article>> articles(n);
  IngestReport report;
  report.outcomes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.outcomes[i].outlet = config.sources[i].outlet_name;
    report.outcomes[i].url = config.sources[i].url;
  }

  // Fetch and extraction are independent per URL; the store is written from
  // this thread only, in source order.
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      UrlOutcome &outcome = report.outcomes[i];
      try {
        Article article = Extract(Fetch(outcome.url, fetch_options));
        article.topic_id = config.topic_id;
        article.outlet = outcome.outlet;
        articles[i] = std::move(article);
      } catch (const Error &e) {
        outcome.error = e.what();
        outcome.error_code = e.code();
      } catch (const std::exception &e) {
        outcome.error = e.what();
      }
    }
  };
  std::size_t workers = std::min<std::size_t>(
      n, static_cast<std::size_t>(std::max(1, concurrency)));
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (std::thread &thread : threads) thread.join();

  for (std::size_t i = 0; i < n; ++i) {
    if (!articles[i]) continue;
    UrlOutcome &outcome = report.outcomes[i];
    try {
      bool created = false;
      outcome.article_id = store.PutArticle(*articles[i], &created);
      outcome.ok = true;
      outcome.is_new = created;
    } catch (const Error &e) {
      outcome.error = e.what();
      outcome.error_code = e.code();
    }
  }
  return report;
}

AnalysisBundle BuildBundle(const std::string &topic_id,
                           const std::vector<Article> &input,
                           const AnalysisParams &params,
                           const Resources &resources,
                           const AnalyzeOptions &options) {
  params.Validate();
  std::vector<Article> articles = input;
  std::sort(articles.begin(), articles.end(),
            [](const Article &a, const Article &b) {
              return a.article_id < b.article_id;
            });

  std::vector<ProcessedArticle> processed =
      options.annotator
          ? PreprocessTopicRemote(articles, resources.preprocess,
                                  *options.annotator)
          : PreprocessTopic(articles, resources.preprocess);

  std::vector<Mention> mentions;
  for (const ProcessedArticle &doc : processed) {
    mentions.insert(mentions.end(), doc.mentions.begin(), doc.mentions.end());
  }
  std::map<std::string, PolarityResult> polarity =
      ScoreTopic(processed, resources.lexicon, params, options.scorer);

  AnalysisBundle bundle;
  bundle.topic_id = topic_id;
  bundle.params_used = params;
  bundle.engine_version = kEngineVersion;
  bundle.concepts = MergeMentions(mentions, resources.concepts, params);

  std::vector<std::string> article_ids;
  for (const ProcessedArticle &doc : processed) {
    article_ids.push_back(doc.article_id);
    std::vector<ScoredMention> &scored = bundle.mentions_by_article[doc.article_id];
    for (const Mention &mention : doc.mentions) {
      scored.push_back({mention, polarity.at(mention.mention_id)});
    }
  }
  bundle.histograms = BuildHistograms(article_ids, bundle.TopConcepts(),
                                      polarity, params);
  return bundle;
}

AnalysisBundle AnalyzeTopic(Store &store, const std::string &topic_id,
                            const AnalysisParams &params,
                            const Resources &resources,
                            const AnalyzeOptions &options) {
  auto [config, articles] = store.LoadTopic(topic_id);
  if (articles.empty()) {
    throw Error(ErrorCode::kValidation,
                "topic '" + topic_id + "' has no articles; run ingest first");
  }
  AnalysisBundle bundle =
      BuildBundle(topic_id, articles, params, resources, options);
  store.PutBundle(bundle);
  return bundle;
}

std::string FormatDouble(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

std::string Fixed(double value, int digits) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%+.*f", digits, value);
  return buffer;
}

std::string Pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string CsvField(const std::string &text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

const Article *FindArticle(const std::vector<Article> &articles,
                           const std::string &article_id) {
  for (const Article &article : articles) {
    if (article.article_id == article_id) return &article;
  }
  return nullptr;
}

}  // namespace

std::string FormatConceptTable(const AnalysisBundle &bundle,
                               const std::vector<Article> &articles) {
  std::vector<Concept> top = bundle.TopConcepts();
  std::size_t label_width = 5;
  for (const Concept &c : top) {
    label_width = std::max(label_width, c.canonical_label.size());
  }
  std::ostringstream out;
  out << "topic " << bundle.topic_id << ": " << bundle.concepts.size()
      << " concepts, top " << top.size() << "\n\n";
  out << Pad("rank", 6) << Pad("label", label_width + 2) << Pad("freq", 6);
  for (std::size_t a = 1; a <= bundle.histograms.size(); ++a) {
    out << Pad("A" + std::to_string(a), 8);
  }
  out << "\n";
  for (std::size_t c = 0; c < top.size(); ++c) {
    out << Pad(std::to_string(c + 1), 6)
        << Pad(top[c].canonical_label, label_width + 2)
        << Pad(std::to_string(top[c].frequency), 6);
    for (const auto &[article_id, histogram] : bundle.histograms) {
      const Bar &bar = histogram.bars[c];
      out << Pad(bar.count == 0 ? "-" : Fixed(bar.mean_polarity, 3), 8);
    }
    out << "\n";
  }
  out << "\n";
  std::size_t column = 1;
  for (const auto &[article_id, histogram] : bundle.histograms) {
    const Article *article = FindArticle(articles, article_id);
    out << "A" << column++ << " = " << article_id;
    if (article != nullptr) {
      out << "  " << article->outlet << "  " << article->title;
    }
    out << "\n";
  }
  return out.str();
}

std::string ExportCsv(const AnalysisBundle &bundle,
                      const std::vector<Article> &articles) {
  std::vector<Concept> top = bundle.TopConcepts();
  std::ostringstream out;
  out << "article_id,outlet,concept_id,canonical_label,count,height,"
         "mean_polarity,color_class\n";
  for (const auto &[article_id, histogram] : bundle.histograms) {
    const Article *article = FindArticle(articles, article_id);
    std::string outlet = article != nullptr ? article->outlet : "";
    for (std::size_t c = 0; c < top.size(); ++c) {
      const Bar &bar = histogram.bars[c];
      out << article_id << ',' << CsvField(outlet) << ',' << bar.concept_id
          << ',' << CsvField(top[c].canonical_label) << ',' << bar.count << ','
          << FormatDouble(bar.height) << ',' << FormatDouble(bar.mean_polarity)
          << ',' << ColorClassName(bar.color_class) << '\n';
    }
  }
  return out.str();
}

}  // namespace newsalyze

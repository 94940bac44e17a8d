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

#ifndef NEWSALYZE_PIPELINE_PIPELINE_H_
#define NEWSALYZE_PIPELINE_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "newsalyze/concepts/concepts.h"
#include "newsalyze/ingest/fetcher.h"
#include "newsalyze/preprocess/annotator.h"
#include "newsalyze/preprocess/remote_annotator.h"
#include "newsalyze/store/store.h"
#include "newsalyze/store/types.h"
#include "newsalyze/tsc/lexicon.h"
#include "newsalyze/tsc/scorer.h"

// End-to-end orchestration of the analysis stages over a store.

namespace newsalyze {

// Data files the pipeline needs, loaded from one directory:
// abbreviations.txt, gazetteer.tsv, honorifics.txt, ambiguous_heads.txt and
// lexicon.tsv.
struct Resources {
  PreprocessResources preprocess;
  ConceptResources concepts;
  Lexicon lexicon;

  static Resources Load(const std::filesystem::path &data_dir);
};

// $NEWSALYZE_DATA if set, else the data directory of the source tree.
std::filesystem::path DefaultDataDir();

struct UrlOutcome {
  std::string outlet;
  std::string url;
  bool ok = false;
  // Set when ok.
  std::string article_id;
  bool is_new = false;
  // Set when not ok.
  std::string error;
  ErrorCode error_code = ErrorCode::kIo;
};

struct IngestReport {
  std::vector<UrlOutcome> outcomes;

  int stored() const;
  int created() const;
};

// Writes the topic config, then fetches and extracts every source (at most
// `concurrency` fetches in flight) and stores the articles. Outcomes are in
// source order. Failures of individual URLs are reported, not thrown.
IngestReport IngestTopic(Store &store, const TopicConfig &config,
                         const FetchOptions &fetch_options,
                         int concurrency = 4);

struct AnalyzeOptions {
  ScorerChoice scorer;
  // When set, preprocessing goes through this external annotator.
  std::optional<RemoteAnnotatorOptions> annotator;
};

// Runs preprocess, concept merging, scoring and aggregation over the given
// articles (in any order) and returns the bundle. Does not touch a store.
AnalysisBundle BuildBundle(const std::string &topic_id,
                           const std::vector<Article> &articles,
                           const AnalysisParams &params,
                           const Resources &resources,
                           const AnalyzeOptions &options = {});

// Loads the topic, builds its bundle with `params` as the effective
// parameters and stores it.
AnalysisBundle AnalyzeTopic(Store &store, const std::string &topic_id,
                            const AnalysisParams &params,
                            const Resources &resources,
                            const AnalyzeOptions &options = {});

// Human-readable table of the top concepts: rank, label, frequency and the
// mean polarity of the concept in each article.
std::string FormatConceptTable(const AnalysisBundle &bundle,
                               const std::vector<Article> &articles);

// One row per (article, top concept) in article-id then rank order, with a
// header line: article_id,outlet,concept_id,canonical_label,count,height,
// mean_polarity,color_class.
std::string ExportCsv(const AnalysisBundle &bundle,
                      const std::vector<Article> &articles);

// Shortest decimal text that reads back to the same double.
std::string FormatDouble(double value);

}  // namespace newsalyze

#endif  // NEWSALYZE_PIPELINE_PIPELINE_H_

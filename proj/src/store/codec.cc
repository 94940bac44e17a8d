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

#include "newsalyze/store/codec.h"

namespace newsalyze {

void to_json(Json &j, const Span &span) {
  j = Json{{"start", span.start}, {"end", span.end}};
}

void from_json(const Json &j, Span &span) {
  j.at("start").get_to(span.start);
  j.at("end").get_to(span.end);
}

void to_json(Json &j, const AnalysisParams &params) {
  j = Json{{"top_k_concepts", params.top_k_concepts},
           {"merge_threshold", params.merge_threshold},
           {"negation_window", params.negation_window},
           {"neutral_band", params.neutral_band},
           {"include_self_tokens", params.include_self_tokens}};
}

// Absent fields take their defaults.
void from_json(const Json &j, AnalysisParams &params) {
  AnalysisParams defaults;
  params.top_k_concepts = j.value("top_k_concepts", defaults.top_k_concepts);
  params.merge_threshold = j.value("merge_threshold", defaults.merge_threshold);
  params.negation_window = j.value("negation_window", defaults.negation_window);
  params.neutral_band = j.value("neutral_band", defaults.neutral_band);
  params.include_self_tokens =
      j.value("include_self_tokens", defaults.include_self_tokens);
}

void to_json(Json &j, const Source &source) {
  j = Json{{"outlet_name", source.outlet_name}, {"url", source.url}};
}

void from_json(const Json &j, Source &source) {
  j.at("outlet_name").get_to(source.outlet_name);
  j.at("url").get_to(source.url);
}

void to_json(Json &j, const TopicConfig &config) {
  j = Json{{"topic_id", config.topic_id},
           {"title", config.title},
           {"sources", config.sources},
           {"analysis_params", config.analysis_params}};
}

void from_json(const Json &j, TopicConfig &config) {
  j.at("topic_id").get_to(config.topic_id);
  config.title = j.value("title", config.topic_id);
  j.at("sources").get_to(config.sources);
  if (j.contains("analysis_params")) {
    j.at("analysis_params").get_to(config.analysis_params);
  } else {
    config.analysis_params = AnalysisParams{};
  }
}

void to_json(Json &j, const Article &article) {
  j = Json{{"article_id", article.article_id},
           {"topic_id", article.topic_id},
           {"outlet", article.outlet},
           {"url", article.url},
           {"title", article.title},
           {"published", nullptr},
           {"body", article.body},
           {"fetched_at", article.fetched_at}};
  if (article.published) j["published"] = *article.published;
}

void from_json(const Json &j, Article &article) {
  j.at("article_id").get_to(article.article_id);
  j.at("topic_id").get_to(article.topic_id);
  j.at("outlet").get_to(article.outlet);
  j.at("url").get_to(article.url);
  j.at("title").get_to(article.title);
  const Json &published = j.at("published");
  if (published.is_null()) {
    article.published.reset();
  } else {
    article.published = published.get<std::string>();
  }
  j.at("body").get_to(article.body);
  j.at("fetched_at").get_to(article.fetched_at);
}

void to_json(Json &j, const Mention &mention) {
  j = Json{{"mention_id", mention.mention_id},
           {"article_id", mention.article_id},
           {"sentence_index", mention.sentence_index},
           {"span", mention.span},
           {"surface", mention.surface},
           {"head", mention.head},
           {"kind", MentionKindName(mention.kind)}};
}

void from_json(const Json &j, Mention &mention) {
  j.at("mention_id").get_to(mention.mention_id);
  j.at("article_id").get_to(mention.article_id);
  j.at("sentence_index").get_to(mention.sentence_index);
  j.at("span").get_to(mention.span);
  j.at("surface").get_to(mention.surface);
  j.at("head").get_to(mention.head);
  mention.kind = ParseMentionKind(j.at("kind").get<std::string>());
}

void to_json(Json &j, const Concept &concept_value) {
  j = Json{{"concept_id", concept_value.concept_id},
           {"canonical_label", concept_value.canonical_label},
           {"members", concept_value.members},
           {"frequency", concept_value.frequency},
           {"per_article_frequency", concept_value.per_article_frequency}};
}

void from_json(const Json &j, Concept &concept_value) {
  j.at("concept_id").get_to(concept_value.concept_id);
  j.at("canonical_label").get_to(concept_value.canonical_label);
  j.at("members").get_to(concept_value.members);
  j.at("frequency").get_to(concept_value.frequency);
  j.at("per_article_frequency").get_to(concept_value.per_article_frequency);
}

void to_json(Json &j, const PolarityResult &result) {
  j = Json{{"mention_id", result.mention_id},
           {"score", result.score},
           {"label", PolarityLabelName(result.label)},
           {"confidence", result.confidence},
           {"scorer", result.scorer}};
}

void from_json(const Json &j, PolarityResult &result) {
  j.at("mention_id").get_to(result.mention_id);
  j.at("score").get_to(result.score);
  result.label = ParsePolarityLabel(j.at("label").get<std::string>());
  j.at("confidence").get_to(result.confidence);
  j.at("scorer").get_to(result.scorer);
}

void to_json(Json &j, const Bar &bar) {
  j = Json{{"concept_id", bar.concept_id},
           {"count", bar.count},
           {"height", bar.height},
           {"mean_polarity", bar.mean_polarity},
           {"color_class", ColorClassName(bar.color_class)}};
}

void from_json(const Json &j, Bar &bar) {
  j.at("concept_id").get_to(bar.concept_id);
  j.at("count").get_to(bar.count);
  j.at("height").get_to(bar.height);
  j.at("mean_polarity").get_to(bar.mean_polarity);
  bar.color_class = ParseColorClass(j.at("color_class").get<std::string>());
}

void to_json(Json &j, const FramingHistogram &histogram) {
  j = Json{{"article_id", histogram.article_id},
           {"concept_order", histogram.concept_order},
           {"bars", histogram.bars}};
}

void from_json(const Json &j, FramingHistogram &histogram) {
  j.at("article_id").get_to(histogram.article_id);
  j.at("concept_order").get_to(histogram.concept_order);
  j.at("bars").get_to(histogram.bars);
}

void to_json(Json &j, const ScoredMention &scored) {
  j = Json{{"mention", scored.mention}, {"polarity", scored.polarity}};
}

void from_json(const Json &j, ScoredMention &scored) {
  j.at("mention").get_to(scored.mention);
  j.at("polarity").get_to(scored.polarity);
}

void to_json(Json &j, const AnalysisBundle &bundle) {
  j = Json{{"topic_id", bundle.topic_id},
           {"concepts", bundle.concepts},
           {"mentions_by_article", bundle.mentions_by_article},
           {"histograms", bundle.histograms},
           {"params_used", bundle.params_used},
           {"engine_version", bundle.engine_version}};
}

void from_json(const Json &j, AnalysisBundle &bundle) {
  j.at("topic_id").get_to(bundle.topic_id);
  j.at("concepts").get_to(bundle.concepts);
  j.at("mentions_by_article").get_to(bundle.mentions_by_article);
  j.at("histograms").get_to(bundle.histograms);
  j.at("params_used").get_to(bundle.params_used);
  j.at("engine_version").get_to(bundle.engine_version);
}

std::string DumpJson(const Json &j) {
  std::string text = j.dump(2, ' ', false, Json::error_handler_t::replace);
  text.push_back('\n');
  return text;
}

Json ParseJson(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kValidation,
                std::string(what) + ": malformed JSON: " + e.what());
  }
}

}  // namespace newsalyze

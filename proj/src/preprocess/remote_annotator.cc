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

#include "newsalyze/preprocess/remote_annotator.h"

#include "json.hpp"
#include "newsalyze/base/errors.h"
#include "newsalyze/base/http_client.h"
#include "newsalyze/base/utf8.h"

namespace newsalyze {

namespace {

using Json = nlohmann::json;

Error Invalid(const std::string &why) {
  return Error(ErrorCode::kValidation, "invalid annotator response: " + why);
}

std::size_t Offset(const Json &object, const char *field) {
  auto it = object.find(field);
  if (it == object.end() || !it->is_number_unsigned()) {
    throw Invalid(std::string("missing or negative offset '") + field + "'");
  }
  return it->get<std::size_t>();
}

Span ParseSpan(const Json &object, std::size_t limit) {
  if (!object.is_object()) throw Invalid("span is not an object");
  Span span{Offset(object, "start"), Offset(object, "end")};
  if (span.start >= span.end || span.end > limit) {
    throw Invalid("span [" + std::to_string(span.start) + "," +
                  std::to_string(span.end) + ") is empty or out of bounds");
  }
  return span;
}

const Json &ArrayField(const Json &object, const char *field) {
  auto it = object.find(field);
  if (it == object.end() || !it->is_array()) {
    throw Invalid(std::string("missing array '") + field + "'");
  }
  return *it;
}

}  // namespace

std::string AnnotatorRequestBody(const std::string &article_id,
                                 std::string_view body) {
  return Json{{"article_id", article_id}, {"text", std::string(body)}}.dump();
}

ProcessedArticle ParseAnnotatorResponse(std::string_view response,
                                        const Article &article) {
  Json j;
  try {
    j = Json::parse(response.begin(), response.end());
  } catch (const Json::exception &e) {
    throw Invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Invalid("not an object");

  ProcessedArticle doc;
  doc.article_id = article.article_id;
  doc.body = Utf8Decode(article.body);
  const std::u32string_view body = doc.body;
  const auto text_of = [&](Span span) {
    return Utf8Encode(body.substr(span.start, span.length()));
  };

  std::size_t previous_end = 0;
  for (const Json &item : ArrayField(j, "sentences")) {
    Sentence sentence;
    sentence.article_id = article.article_id;
    sentence.index = static_cast<int>(doc.sentences.size());
    sentence.span = ParseSpan(item, body.size());
    if (sentence.span.start < previous_end) {
      throw Invalid("sentences overlap or are out of order");
    }
    for (std::size_t k = previous_end; k < sentence.span.start; ++k) {
      if (!IsSpace(body[k])) throw Invalid("sentences leave text uncovered");
    }
    previous_end = sentence.span.end;
    doc.sentences.push_back(sentence);
  }
  for (std::size_t k = previous_end; k < body.size(); ++k) {
    if (!IsSpace(body[k])) throw Invalid("sentences leave text uncovered");
  }

  const Json &token_lists = ArrayField(j, "tokens");
  if (token_lists.size() != doc.sentences.size()) {
    throw Invalid("need one token list per sentence");
  }
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    if (!token_lists[s].is_array()) throw Invalid("token list not an array");
    std::vector<Token> tokens;
    std::size_t token_end = doc.sentences[s].span.start;
    for (const Json &item : token_lists[s]) {
      Token token;
      token.index = static_cast<int>(tokens.size());
      token.span = ParseSpan(item, body.size());
      if (!doc.sentences[s].span.Contains(token.span) ||
          token.span.start < token_end) {
        throw Invalid("token outside its sentence or out of order");
      }
      token_end = token.span.end;
      token.surface = text_of(token.span);
      token.is_capitalized = IsUpper(body[token.span.start]);
      token.is_sentence_initial = tokens.empty();
      tokens.push_back(std::move(token));
    }
    doc.tokens.push_back(std::move(tokens));
  }

  for (const Json &item : ArrayField(j, "mentions")) {
    if (!item.is_object()) throw Invalid("mention is not an object");
    auto index = item.find("sentence_index");
    if (index == item.end() || !index->is_number_unsigned() ||
        index->get<std::size_t>() >= doc.sentences.size()) {
      throw Invalid("bad sentence_index");
    }
    Mention mention;
    mention.article_id = article.article_id;
    mention.sentence_index = index->get<int>();
    mention.span = ParseSpan(item, body.size());
    if (!doc.sentences[mention.sentence_index].span.Contains(mention.span)) {
      throw Invalid("mention outside its sentence");
    }
    if (!doc.mentions.empty() &&
        doc.mentions.back().sentence_index == mention.sentence_index &&
        doc.mentions.back().span.end > mention.span.start) {
      throw Invalid("mentions overlap or are out of order");
    }
    if (!doc.mentions.empty() &&
        doc.mentions.back().sentence_index > mention.sentence_index) {
      throw Invalid("mentions out of sentence order");
    }
    bool covers_token = false;
    for (const Token &token : doc.tokens[mention.sentence_index]) {
      covers_token = covers_token || token.span.Overlaps(mention.span);
    }
    if (!covers_token) throw Invalid("mention covers no token");
    mention.surface = text_of(mention.span);
    auto head = item.find("head");
    if (head != item.end() && head->is_string()) {
      mention.head = head->get<std::string>();
    } else {
      std::size_t space = mention.surface.find_last_of(' ');
      mention.head = space == std::string::npos
                         ? mention.surface
                         : mention.surface.substr(space + 1);
    }
    auto kind = item.find("kind");
    if (kind != item.end() && kind->is_string()) {
      mention.kind = ParseMentionKind(kind->get<std::string>());
    }
    mention.mention_id = MakeMentionId(article.article_id, doc.mentions.size());
    doc.mentions.push_back(std::move(mention));
  }
  return doc;
}

std::vector<ProcessedArticle> PreprocessTopicRemote(
    const std::vector<Article> &articles, const PreprocessResources &resources,
    const RemoteAnnotatorOptions &options,
    std::vector<std::string> *fallbacks) {
  HttpOptions http;
  http.timeout = options.timeout;
  http.max_redirects = 0;

  std::vector<ProcessedArticle> processed;
  std::vector<ProcessedArticle> rule_based;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    const Article &article = articles[i];
    try {
      HttpResponse response = HttpPostJson(
          options.endpoint, AnnotatorRequestBody(article.article_id, article.body),
          http);
      if (response.status < 200 || response.status > 299) {
        throw Error(ErrorCode::kNetwork,
                    "annotator returned HTTP " + std::to_string(response.status));
      }
      processed.push_back(ParseAnnotatorResponse(response.body, article));
    } catch (const Error &) {
      // Rule-based recurrence is topic-wide, so the fallback is computed over
      // the whole topic once and the article's share is taken from it.
      if (rule_based.empty()) rule_based = PreprocessTopic(articles, resources);
      processed.push_back(rule_based[i]);
      if (fallbacks != nullptr) fallbacks->push_back(article.article_id);
    }
  }
  return processed;
}

}  // namespace newsalyze

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

#include "newsalyze/tsc/scorer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "newsalyze/base/errors.h"
#include "newsalyze/base/http_client.h"
#include "newsalyze/base/utf8.h"

namespace newsalyze {

namespace {

bool EndsWith(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() &&
         text.substr(text.size() - suffix.size()) == suffix;
}

}  // namespace

bool IsNegator(std::string_view token) {
  return token == "not" || token == "n't" || token == "no" ||
         token == "never" || token == "without" || EndsWith(token, "n't") ||
         EndsWith(token, "n’t");
}

PolarityResult ScoreLexicon(const std::vector<Token> &tokens,
                            const Span &sentence_span, const Mention &mention,
                            const Lexicon &lexicon,
                            const AnalysisParams &params) {
  if (!sentence_span.Contains(mention.span)) {
    throw Error(ErrorCode::kContract,
                "mention " + mention.mention_id + " lies outside its sentence");
  }
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].span.Overlaps(mention.span)) targets.push_back(i);
  }
  if (targets.empty()) {
    throw Error(ErrorCode::kContract,
                "mention " + mention.mention_id + " covers no token");
  }

  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const Token &token : tokens) lowered.push_back(ToLowerUtf8(token.surface));

  double raw = 0.0;
  int hits = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    bool inside = tokens[i].span.Overlaps(mention.span);
    if (inside && !params.include_self_tokens) continue;
    std::optional<double> polarity = lexicon.Find(lowered[i]);
    if (!polarity) continue;

    std::size_t distance = 0;
    if (!inside) {
      distance = tokens.size();
      for (std::size_t t : targets) {
        distance = std::min(distance, t > i ? t - i : i - t);
      }
    }
    std::size_t window = static_cast<std::size_t>(params.negation_window);
    bool negated = false;
    for (std::size_t k = i > window ? i - window : 0; k < i; ++k) {
      if (IsNegator(lowered[k])) {
        negated = true;
        break;
      }
    }
    double weight = 1.0 / (1.0 + static_cast<double>(distance));
    raw += (negated ? -*polarity : *polarity) * weight;
    ++hits;
  }

  PolarityResult result;
  result.mention_id = mention.mention_id;
  result.score = std::clamp(raw, -1.0, 1.0);
  result.label = LabelForScore(result.score, params.neutral_band);
  result.confidence = std::min(1.0, hits / 3.0);
  result.scorer = kLexiconScorer;
  return result;
}

std::string RemoteRequestBody(std::string_view sentence_text,
                              const Span &target) {
  nlohmann::json request = {{"text", std::string(sentence_text)},
                            {"target_start", target.start},
                            {"target_end", target.end}};
  return request.dump();
}

PolarityResult ParseRemoteResponse(std::string_view body,
                                   const std::string &mention_id,
                                   double neutral_band) {
  const auto invalid = [](const std::string &why) {
    return Error(ErrorCode::kValidation, "invalid scorer response: " + why);
  };
  nlohmann::json response;
  try {
    response = nlohmann::json::parse(body.begin(), body.end());
  } catch (const nlohmann::json::exception &e) {
    throw invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!response.is_object()) throw invalid("not an object");
  const auto number = [&](const char *field) {
    auto it = response.find(field);
    if (it == response.end() || !it->is_number()) {
      throw invalid(std::string("missing numeric ") + field);
    }
    double value = it->get<double>();
    if (!std::isfinite(value)) throw invalid(std::string(field) + " not finite");
    return value;
  };
  PolarityResult result;
  result.mention_id = mention_id;
  result.score = number("score");
  result.confidence = number("confidence");
  auto label = response.find("label");
  if (label == response.end() || !label->is_string()) {
    throw invalid("missing label");
  }
  result.label = ParsePolarityLabel(label->get<std::string>());
  result.scorer = kRemoteScorer;
  if (result.score < -1.0 || result.score > 1.0) {
    throw invalid("score outside [-1,1]");
  }
  if (result.confidence < 0.0 || result.confidence > 1.0) {
    throw invalid("confidence outside [0,1]");
  }
  if (result.label != LabelForScore(result.score, neutral_band)) {
    throw invalid("label inconsistent with score and neutral band");
  }
  return result;
}

std::optional<PolarityResult> TryScoreRemote(
    std::string_view sentence_text, const Span &target,
    const std::string &mention_id, const RemoteScorerOptions &options,
    double neutral_band, std::string *error) {
  HttpOptions http;
  http.timeout = options.timeout;
  http.max_redirects = 0;
  try {
    HttpResponse response = HttpPostJson(
        options.endpoint, RemoteRequestBody(sentence_text, target), http);
    if (response.status < 200 || response.status > 299) {
      throw Error(ErrorCode::kNetwork,
                  "scorer returned HTTP " + std::to_string(response.status));
    }
    return ParseRemoteResponse(response.body, mention_id, neutral_band);
  } catch (const Error &e) {
    if (error != nullptr) *error = e.what();
    return std::nullopt;
  }
}

PolarityResult ScoreRemote(const std::u32string &body,
                           const Sentence &sentence,
                           const std::vector<Token> &sentence_tokens,
                           const Mention &mention,
                           const RemoteScorerOptions &options,
                           const Lexicon &lexicon,
                           const AnalysisParams &params) {
  if (sentence.span.Contains(mention.span)) {
    std::string text = Utf8Encode(std::u32string_view(body).substr(
        sentence.span.start, sentence.span.length()));
    Span target{mention.span.start - sentence.span.start,
                mention.span.end - sentence.span.start};
    if (auto result = TryScoreRemote(text, target, mention.mention_id, options,
                                     params.neutral_band)) {
      return *result;
    }
  }
  PolarityResult fallback =
      ScoreLexicon(sentence_tokens, sentence.span, mention, lexicon, params);
  fallback.scorer = kLexiconFallbackScorer;
  return fallback;
}

std::map<std::string, PolarityResult> ScoreTopic(
    const std::vector<ProcessedArticle> &articles, const Lexicon &lexicon,
    const AnalysisParams &params, const ScorerChoice &choice) {
  struct Job {
    const ProcessedArticle *article;
    const Mention *mention;
  };
  std::vector<Job> jobs;
  for (const ProcessedArticle &article : articles) {
    for (const Mention &mention : article.mentions) {
      jobs.push_back({&article, &mention});
    }
  }
  std::vector<PolarityResult> results(jobs.size());
  const auto run = [&](std::size_t i) {
    const ProcessedArticle &article = *jobs[i].article;
    const Mention &mention = *jobs[i].mention;
    const Sentence &sentence = article.sentences.at(mention.sentence_index);
    const std::vector<Token> &tokens = article.tokens.at(mention.sentence_index);
    if (choice.kind == ScorerChoice::Kind::kRemote) {
      results[i] = ScoreRemote(article.body, sentence, tokens, mention,
                               choice.remote, lexicon, params);
    } else {
      results[i] = ScoreLexicon(tokens, sentence.span, mention, lexicon, params);
    }
  };

  if (choice.kind == ScorerChoice::Kind::kRemote && jobs.size() > 1) {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t workers = std::min<std::size_t>(
        jobs.size(), static_cast<std::size_t>(
                         std::max(1, choice.remote.concurrency)));
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < jobs.size(); i = next++) run(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = jobs.size();
        }
      });
    }
    for (std::thread &t : threads) t.join();
    if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) run(i);
  }

  std::map<std::string, PolarityResult> by_mention;
  for (PolarityResult &result : results) {
    std::string id = result.mention_id;
    by_mention.emplace(std::move(id), std::move(result));
  }
  return by_mention;
}

}  // namespace newsalyze

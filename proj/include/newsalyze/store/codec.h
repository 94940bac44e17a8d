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

#ifndef NEWSALYZE_STORE_CODEC_H_
#define NEWSALYZE_STORE_CODEC_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "newsalyze/store/types.h"

// JSON mapping for the store types. Field names are the snake_case names of
// the struct members; enums serialize as their lowercase names.

namespace newsalyze {

using Json = nlohmann::json;

void to_json(Json &j, const Span &span);
void from_json(const Json &j, Span &span);
void to_json(Json &j, const AnalysisParams &params);
void from_json(const Json &j, AnalysisParams &params);
void to_json(Json &j, const Source &source);
void from_json(const Json &j, Source &source);
void to_json(Json &j, const TopicConfig &config);
void from_json(const Json &j, TopicConfig &config);
void to_json(Json &j, const Article &article);
void from_json(const Json &j, Article &article);
void to_json(Json &j, const Mention &mention);
void from_json(const Json &j, Mention &mention);
void to_json(Json &j, const Concept &concept_value);
void from_json(const Json &j, Concept &concept_value);
void to_json(Json &j, const PolarityResult &result);
void from_json(const Json &j, PolarityResult &result);
void to_json(Json &j, const Bar &bar);
void from_json(const Json &j, Bar &bar);
void to_json(Json &j, const FramingHistogram &histogram);
void from_json(const Json &j, FramingHistogram &histogram);
void to_json(Json &j, const ScoredMention &scored);
void from_json(const Json &j, ScoredMention &scored);
void to_json(Json &j, const AnalysisBundle &bundle);
void from_json(const Json &j, AnalysisBundle &bundle);

// Canonical text form used for files and API bodies: sorted keys, two-space
// indent, trailing newline.
std::string DumpJson(const Json &j);

// Parses JSON text and converts it, mapping any parse or schema failure to
// Error(kValidation) prefixed with `what`.
template <typename T>
T ParseJsonAs(std::string_view text, std::string_view what);

Json ParseJson(std::string_view text, std::string_view what);

}  // namespace newsalyze

#include "newsalyze/base/errors.h"

namespace newsalyze {

template <typename T>
T ParseJsonAs(std::string_view text, std::string_view what) {
  Json j = ParseJson(text, what);
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kValidation,
                std::string(what) + ": schema error: " + e.what());
  }
}

}  // namespace newsalyze

#endif  // NEWSALYZE_STORE_CODEC_H_

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

#include "newsalyze/store/types.h"

#include <algorithm>
#include <cmath>
#include <regex>

#include "newsalyze/base/errors.h"
#include "newsalyze/base/hash.h"

namespace newsalyze {

void AnalysisParams::Validate() const {
  if (top_k_concepts < 1) {
    throw Error(ErrorCode::kValidation, "top_k_concepts must be positive");
  }
  if (!(merge_threshold >= 0.0 && merge_threshold <= 1.0)) {
    throw Error(ErrorCode::kValidation, "merge_threshold must be in [0,1]");
  }
  if (negation_window < 0) {
    throw Error(ErrorCode::kValidation, "negation_window must be >= 0");
  }
  if (!(neutral_band >= 0.0) || !std::isfinite(neutral_band)) {
    throw Error(ErrorCode::kValidation, "neutral_band must be >= 0");
  }
}

void TopicConfig::Validate() const {
  if (!IsValidTopicId(topic_id)) {
    throw Error(ErrorCode::kValidation,
                "topic_id must match [a-z0-9-]+: '" + topic_id + "'");
  }
  if (sources.empty()) {
    throw Error(ErrorCode::kValidation, "topic " + topic_id + " has no sources");
  }
  for (const Source &source : sources) {
    if (!IsValidAbsoluteUrl(source.url)) {
      throw Error(ErrorCode::kValidation, "invalid source url: " + source.url);
    }
  }
  analysis_params.Validate();
}

std::string ComputeArticleId(std::string_view url, std::string_view body) {
  std::string data;
  data.reserve(url.size() + body.size() + 1);
  data.append(url);
  data.push_back('\n');
  data.append(body);
  return Sha256Hex(data).substr(0, 16);
}

bool IsValidTopicId(std::string_view topic_id) {
  if (topic_id.empty()) return false;
  return std::all_of(topic_id.begin(), topic_id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
  });
}

bool IsValidAbsoluteUrl(std::string_view url) {
  static const std::regex kUrl(
      R"(^[A-Za-z][A-Za-z0-9+.\-]*://[^\s/?#]+([/?#][^\s]*)?$)");
  return std::regex_match(url.begin(), url.end(), kUrl);
}

const char *MentionKindName(MentionKind kind) {
  switch (kind) {
    case MentionKind::kPerson: return "person";
    case MentionKind::kOrg: return "org";
    case MentionKind::kPlace: return "place";
    case MentionKind::kOther: return "other";
  }
  return "other";
}

MentionKind ParseMentionKind(std::string_view name) {
  if (name == "person") return MentionKind::kPerson;
  if (name == "org") return MentionKind::kOrg;
  if (name == "place") return MentionKind::kPlace;
  if (name == "other") return MentionKind::kOther;
  throw Error(ErrorCode::kValidation,
              "unknown mention kind '" + std::string(name) + "'");
}

const char *PolarityLabelName(PolarityLabel label) {
  switch (label) {
    case PolarityLabel::kNegative: return "negative";
    case PolarityLabel::kNeutral: return "neutral";
    case PolarityLabel::kPositive: return "positive";
  }
  return "neutral";
}

PolarityLabel ParsePolarityLabel(std::string_view name) {
  if (name == "negative") return PolarityLabel::kNegative;
  if (name == "neutral") return PolarityLabel::kNeutral;
  if (name == "positive") return PolarityLabel::kPositive;
  throw Error(ErrorCode::kValidation,
              "unknown polarity label '" + std::string(name) + "'");
}

PolarityLabel LabelForScore(double score, double neutral_band) {
  if (score < -neutral_band) return PolarityLabel::kNegative;
  if (score > neutral_band) return PolarityLabel::kPositive;
  return PolarityLabel::kNeutral;
}

const char *ColorClassName(ColorClass color) {
  switch (color) {
    case ColorClass::kStrongNegative: return "strong-negative";
    case ColorClass::kNegative: return "negative";
    case ColorClass::kNeutral: return "neutral";
    case ColorClass::kPositive: return "positive";
    case ColorClass::kStrongPositive: return "strong-positive";
  }
  return "neutral";
}

ColorClass ParseColorClass(std::string_view name) {
  if (name == "strong-negative") return ColorClass::kStrongNegative;
  if (name == "negative") return ColorClass::kNegative;
  if (name == "neutral") return ColorClass::kNeutral;
  if (name == "positive") return ColorClass::kPositive;
  if (name == "strong-positive") return ColorClass::kStrongPositive;
  throw Error(ErrorCode::kValidation,
              "unknown color class '" + std::string(name) + "'");
}

ColorClass ColorClassFor(double polarity, double neutral_band) {
  if (polarity <= -0.5) return ColorClass::kStrongNegative;
  if (polarity >= 0.5) return ColorClass::kStrongPositive;
  if (polarity < -neutral_band) return ColorClass::kNegative;
  if (polarity > neutral_band) return ColorClass::kPositive;
  return ColorClass::kNeutral;
}

std::vector<Concept> AnalysisBundle::TopConcepts() const {
  std::size_t k = std::min<std::size_t>(
      concepts.size(), static_cast<std::size_t>(
                           std::max(0, params_used.top_k_concepts)));
  return {concepts.begin(), concepts.begin() + static_cast<long>(k)};
}

}  // namespace newsalyze

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

#ifndef NEWSALYZE_PREPROCESS_REMOTE_ANNOTATOR_H_
#define NEWSALYZE_PREPROCESS_REMOTE_ANNOTATOR_H_

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "newsalyze/preprocess/annotator.h"
#include "newsalyze/store/types.h"

// Client for an external annotator service that replaces the rule-based
// annotator. Wire contract (JSON over HTTP POST, offsets in Unicode scalar
// values of the body):
//
//   request:  {"article_id": "...", "text": "<body>"}
//   response: {"sentences": [{"start": s, "end": e}, ...],
//              "tokens":    [[{"start": s, "end": e}, ...], ...],
//              "mentions":  [{"sentence_index": i, "start": s, "end": e,
//                             "head": "...", "kind": "person"}, ...]}
//
// "tokens" holds one list per sentence. "head" and "kind" are optional.
// Surfaces and token flags are derived locally from the body, so a service
// cannot make a span and its surface disagree.

namespace newsalyze {

struct RemoteAnnotatorOptions {
  std::string endpoint;
  std::chrono::milliseconds timeout{10000};
};

std::string AnnotatorRequestBody(const std::string &article_id,
                                 std::string_view body);

// Validates a response against the sentence, token and mention invariants
// and converts it. Throws Error(kValidation) on any violation.
ProcessedArticle ParseAnnotatorResponse(std::string_view response,
                                        const Article &article);

// Annotates a topic through the service. Articles whose request fails or
// whose response is invalid are annotated by the rule-based path instead,
// and their ids are appended to *fallbacks when given.
std::vector<ProcessedArticle> PreprocessTopicRemote(
    const std::vector<Article> &articles, const PreprocessResources &resources,
    const RemoteAnnotatorOptions &options,
    std::vector<std::string> *fallbacks = nullptr);

}  // namespace newsalyze

#endif  // NEWSALYZE_PREPROCESS_REMOTE_ANNOTATOR_H_

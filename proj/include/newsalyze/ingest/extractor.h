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

#ifndef NEWSALYZE_INGEST_EXTRACTOR_H_
#define NEWSALYZE_INGEST_EXTRACTOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "newsalyze/ingest/fetcher.h"
#include "newsalyze/ingest/html.h"
#include "newsalyze/store/types.h"

namespace newsalyze {

// Text statistics of one candidate block. Lengths count non-whitespace
// characters so that separators between blocks do not skew the comparison.
struct BlockScore {
  const HtmlNode *node = nullptr;
  long text_length = 0;
  long link_text_length = 0;

  // text_length * (1 - link_text_length / text_length), which equals
  // text_length - link_text_length; the integer form keeps ties exact.
  long score() const { return text_length - link_text_length; }
};

// Scores every candidate block below `root` in document order, skipping
// boilerplate elements (script, style, nav, header, footer, aside, form).
std::vector<BlockScore> ScoreBlocks(const HtmlNode &root);

// Picks the main-content block: maximal score; between nested blocks with
// equal score the innermost wins, otherwise the earliest in document order.
// Returns nullptr when no block carries text.
const HtmlNode *SelectContentBlock(const HtmlNode &root);

// Visible text of a subtree with block elements mapped to line breaks and
// whitespace normalized.
std::string RenderBlockText(const HtmlNode &node);

// Collapses runs of spaces to one, trims each line and drops empty lines, so
// paragraphs end up separated by exactly one newline.
std::string NormalizeWhitespace(std::string_view text);

// Turns a fetched document into an Article with url, title, published, body,
// fetched_at and article_id filled in; topic_id and outlet are left to the
// caller. Throws Error(kValidation) when no text can be extracted.
Article Extract(const RawDocument &raw);

}  // namespace newsalyze

#endif  // NEWSALYZE_INGEST_EXTRACTOR_H_

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

#include "newsalyze/ingest/extractor.h"

#include <unordered_set>
#include <vector>

#include "newsalyze/base/errors.h"
#include "newsalyze/base/time.h"
#include "newsalyze/base/utf8.h"

namespace newsalyze {

namespace {

const std::unordered_set<std::string_view> kBoilerplate = {
    "script", "style", "nav", "header", "footer", "aside", "form",
    "noscript", "template", "head", "iframe", "title"};

const std::unordered_set<std::string_view> kCandidates = {
    "body", "article", "main", "section", "div", "p", "td", "blockquote",
    "pre", "table", "tbody", "center", "ul", "ol", "li", "dd"};

const std::unordered_set<std::string_view> kBlockElements = {
    "address", "article", "aside", "blockquote", "body", "center", "dd",
    "details", "div", "dl", "dt", "fieldset", "figcaption", "figure", "h1",
    "h2", "h3", "h4", "h5", "h6", "hr", "li", "main", "ol", "p", "pre",
    "section", "summary", "table", "tbody", "thead", "tfoot", "tr", "ul",
    "caption", "html"};

bool IsSkipped(const HtmlNode &node) {
  return node.is_element() && kBoilerplate.count(node.tag);
}

long CountNonSpace(std::string_view text) {
  long n = 0;
  for (char32_t ch : Utf8Decode(text)) {
    if (!IsSpace(ch)) ++n;
  }
  return n;
}

struct Counts {
  long text = 0;
  long link = 0;
};

Counts Accumulate(const HtmlNode &node, bool in_link,
                  std::vector<BlockScore> *out) {
  if (IsSkipped(node)) return {};
  if (node.is_text()) {
    long n = CountNonSpace(node.text);
    return {n, in_link ? n : 0};
  }
  bool link = in_link || (node.is_element() && node.tag == "a");
  std::size_t slot = out->size();
  bool candidate = node.is_element() && kCandidates.count(node.tag);
  if (candidate) out->push_back(BlockScore{&node, 0, 0});
  Counts total;
  for (const auto &child : node.children) {
    Counts c = Accumulate(*child, link, out);
    total.text += c.text;
    total.link += c.link;
  }
  if (candidate) {
    (*out)[slot].text_length = total.text;
    (*out)[slot].link_text_length = total.link;
  }
  return total;
}

bool IsDescendant(const HtmlNode *node, const HtmlNode *ancestor) {
  for (const HtmlNode *p = node->parent; p != nullptr; p = p->parent) {
    if (p == ancestor) return true;
  }
  return false;
}

void Render(const HtmlNode &node, std::string *out) {
  if (IsSkipped(node)) return;
  if (node.is_text()) {
    // Source line breaks inside text are ordinary whitespace.
    for (char c : node.text) out->push_back(c == '\n' || c == '\r' ? ' ' : c);
    return;
  }
  if (node.is_element()) {
    if (node.tag == "br") {
      out->push_back('\n');
      return;
    }
    if (node.tag == "td" || node.tag == "th") out->push_back(' ');
  }
  bool block = node.is_element() && kBlockElements.count(node.tag);
  if (block) out->push_back('\n');
  for (const auto &child : node.children) Render(*child, out);
  if (block) out->push_back('\n');
}

std::string SingleLine(std::string_view text) {
  std::string line = NormalizeWhitespace(text);
  for (char &c : line) {
    if (c == '\n') c = ' ';
  }
  return line;
}

std::string TextContent(const HtmlNode &node) {
  std::string raw;
  Render(node, &raw);
  return SingleLine(raw);
}

// First element (pre-order) satisfying pred.
template <typename Pred>
const HtmlNode *FindFirst(const HtmlNode &root, Pred pred) {
  if (root.is_element() && pred(root)) return &root;
  for (const auto &child : root.children) {
    if (const HtmlNode *found = FindFirst(*child, pred)) return found;
  }
  return nullptr;
}

std::string RawText(const HtmlNode &node) {
  std::string text;
  VisitPreOrder(node, [&](const HtmlNode &n) {
    if (n.is_text()) text += n.text;
  });
  return text;
}

std::string ExtractTitle(const HtmlNode &document) {
  const HtmlNode *og = FindFirst(document, [](const HtmlNode &n) {
    if (n.tag != "meta") return false;
    const std::string *property = n.Attribute("property");
    if (property == nullptr) property = n.Attribute("name");
    const std::string *content = n.Attribute("content");
    return property != nullptr && *property == "og:title" &&
           content != nullptr && !NormalizeWhitespace(*content).empty();
  });
  if (og != nullptr) return SingleLine(*og->Attribute("content"));
  const HtmlNode *title = FindFirst(document, [](const HtmlNode &n) {
    return n.tag == "title" && !NormalizeWhitespace(RawText(n)).empty();
  });
  if (title != nullptr) return SingleLine(RawText(*title));
  const HtmlNode *h1 = FindFirst(document, [](const HtmlNode &n) {
    return n.tag == "h1" && !TextContent(n).empty();
  });
  return h1 != nullptr ? TextContent(*h1) : std::string();
}

std::optional<std::string> ExtractPublished(const HtmlNode &document) {
  static const std::unordered_set<std::string_view> kDateMeta = {
      "article:published_time", "date", "pubdate", "publishdate",
      "dc.date", "dcterms.date"};
  std::optional<std::string> found;
  VisitPreOrder(document, [&](const HtmlNode &n) {
    if (found || !n.is_element()) return;
    const std::string *value = nullptr;
    if (n.tag == "meta") {
      const std::string *key = n.Attribute("property");
      if (key == nullptr) key = n.Attribute("name");
      if (key != nullptr && kDateMeta.count(*key)) {
        value = n.Attribute("content");
      }
    } else if (n.tag == "time") {
      value = n.Attribute("datetime");
    }
    if (value != nullptr && value->size() >= 10 &&
        IsIsoDate(std::string_view(*value).substr(0, 10))) {
      found = value->substr(0, 10);
    }
  });
  return found;
}

}  // namespace

std::vector<BlockScore> ScoreBlocks(const HtmlNode &root) {
  std::vector<BlockScore> scores;
  Accumulate(root, false, &scores);
  return scores;
}

const HtmlNode *SelectContentBlock(const HtmlNode &root) {
  const BlockScore *best = nullptr;
  std::vector<BlockScore> scores = ScoreBlocks(root);
  for (const BlockScore &s : scores) {
    if (s.score() <= 0) continue;
    if (best == nullptr || s.score() > best->score() ||
        (s.score() == best->score() && IsDescendant(s.node, best->node))) {
      best = &s;
    }
  }
  return best != nullptr ? best->node : nullptr;
}

std::string RenderBlockText(const HtmlNode &node) {
  std::string raw;
  Render(node, &raw);
  return NormalizeWhitespace(raw);
}

std::string NormalizeWhitespace(std::string_view text) {
  std::u32string in = Utf8Decode(text);
  std::u32string out;
  std::u32string line;
  bool pending_space = false;
  const auto end_line = [&]() {
    if (!line.empty()) {
      if (!out.empty()) out.push_back('\n');
      out += line;
    }
    line.clear();
    pending_space = false;
  };
  for (char32_t ch : in) {
    if (ch == '\n') {
      end_line();
    } else if (IsSpace(ch)) {
      pending_space = !line.empty();
    } else {
      if (pending_space) line.push_back(' ');
      pending_space = false;
      line.push_back(ch);
    }
  }
  end_line();
  return Utf8Encode(out);
}

Article Extract(const RawDocument &raw) {
  Article article;
  article.url = raw.url;
  article.fetched_at = raw.fetched_at;
  std::string bytes = Utf8Sanitize(raw.bytes);

  if (raw.content_type.find("text/plain") != std::string::npos) {
    std::string text = bytes;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
      if (text[i] == '\r' && text[i + 1] == '\n') text[i] = ' ';
    }
    article.body = NormalizeWhitespace(text);
    article.title = article.body.substr(0, article.body.find('\n'));
  } else {
    std::unique_ptr<HtmlNode> document = ParseHtml(bytes);
    article.title = ExtractTitle(*document);
    article.published = ExtractPublished(*document);
    const HtmlNode *body = FindFirst(
        *document, [](const HtmlNode &n) { return n.tag == "body"; });
    const HtmlNode *block =
        SelectContentBlock(body != nullptr ? *body : *document);
    if (block != nullptr) article.body = RenderBlockText(*block);
  }
  if (article.body.empty()) {
    throw Error(ErrorCode::kValidation,
                "no extractable text in " + raw.url);
  }
  article.article_id = ComputeArticleId(article.url, article.body);
  return article;
}

}  // namespace newsalyze

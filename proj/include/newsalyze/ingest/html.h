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

#ifndef NEWSALYZE_INGEST_HTML_H_
#define NEWSALYZE_INGEST_HTML_H_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newsalyze {

// A forgiving HTML tree builder. It handles the markup found on real news
// pages (unclosed <p>/<li>, void elements, comments, raw-text script/style
// bodies, stray end tags) without attempting full HTML5 conformance.
struct HtmlNode {
  enum class Type { kDocument, kElement, kText };

  Type type = Type::kElement;
  // Lowercase tag name for elements.
  std::string tag;
  // Lowercase attribute names, entity-decoded values.
  std::vector<std::pair<std::string, std::string>> attributes;
  // Entity-decoded character data for text nodes.
  std::string text;
  std::vector<std::unique_ptr<HtmlNode>> children;
  HtmlNode *parent = nullptr;

  bool is_element() const { return type == Type::kElement; }
  bool is_text() const { return type == Type::kText; }
  // Attribute value, or nullptr.
  const std::string *Attribute(std::string_view name) const;
};

// Parses a document. Never fails; malformed markup degrades to text.
std::unique_ptr<HtmlNode> ParseHtml(std::string_view html);

// Decodes named and numeric character references.
std::string DecodeEntities(std::string_view text);

// Depth-first pre-order visit of all nodes below (and including) root.
template <typename Fn>
void VisitPreOrder(const HtmlNode &root, Fn &&fn) {
  fn(root);
  for (const auto &child : root.children) VisitPreOrder(*child, fn);
}

}  // namespace newsalyze

#endif  // NEWSALYZE_INGEST_HTML_H_

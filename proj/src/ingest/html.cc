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

#include "newsalyze/ingest/html.h"

#include <algorithm>
#include <array>
#include <cstring>
#include <unordered_map>
#include <unordered_set>

#include "newsalyze/base/utf8.h"

namespace newsalyze {

namespace {

const std::unordered_map<std::string_view, char32_t> &NamedEntities() {
  static const std::unordered_map<std::string_view, char32_t> kEntities = {
      {"amp", '&'},        {"lt", '<'},          {"gt", '>'},
      {"quot", '"'},       {"apos", '\''},       {"nbsp", 0xA0},
      {"iexcl", 0xA1},     {"cent", 0xA2},       {"pound", 0xA3},
      {"curren", 0xA4},    {"yen", 0xA5},        {"brvbar", 0xA6},
      {"sect", 0xA7},      {"uml", 0xA8},        {"copy", 0xA9},
      {"ordf", 0xAA},      {"laquo", 0xAB},      {"not", 0xAC},
      {"shy", 0xAD},       {"reg", 0xAE},        {"macr", 0xAF},
      {"deg", 0xB0},       {"plusmn", 0xB1},     {"sup2", 0xB2},
      {"sup3", 0xB3},      {"acute", 0xB4},      {"micro", 0xB5},
      {"para", 0xB6},      {"middot", 0xB7},     {"cedil", 0xB8},
      {"sup1", 0xB9},      {"ordm", 0xBA},       {"raquo", 0xBB},
      {"frac14", 0xBC},    {"frac12", 0xBD},     {"frac34", 0xBE},
      {"iquest", 0xBF},    {"Agrave", 0xC0},     {"Aacute", 0xC1},
      {"Acirc", 0xC2},     {"Atilde", 0xC3},     {"Auml", 0xC4},
      {"Aring", 0xC5},     {"AElig", 0xC6},      {"Ccedil", 0xC7},
      {"Egrave", 0xC8},    {"Eacute", 0xC9},     {"Ecirc", 0xCA},
      {"Euml", 0xCB},      {"Igrave", 0xCC},     {"Iacute", 0xCD},
      {"Icirc", 0xCE},     {"Iuml", 0xCF},       {"ETH", 0xD0},
      {"Ntilde", 0xD1},    {"Ograve", 0xD2},     {"Oacute", 0xD3},
      {"Ocirc", 0xD4},     {"Otilde", 0xD5},     {"Ouml", 0xD6},
      {"times", 0xD7},     {"Oslash", 0xD8},     {"Ugrave", 0xD9},
      {"Uacute", 0xDA},    {"Ucirc", 0xDB},      {"Uuml", 0xDC},
      {"Yacute", 0xDD},    {"THORN", 0xDE},      {"szlig", 0xDF},
      {"agrave", 0xE0},    {"aacute", 0xE1},     {"acirc", 0xE2},
      {"atilde", 0xE3},    {"auml", 0xE4},       {"aring", 0xE5},
      {"aelig", 0xE6},     {"ccedil", 0xE7},     {"egrave", 0xE8},
      {"eacute", 0xE9},    {"ecirc", 0xEA},      {"euml", 0xEB},
      {"igrave", 0xEC},    {"iacute", 0xED},     {"icirc", 0xEE},
      {"iuml", 0xEF},      {"eth", 0xF0},        {"ntilde", 0xF1},
      {"ograve", 0xF2},    {"oacute", 0xF3},     {"ocirc", 0xF4},
      {"otilde", 0xF5},    {"ouml", 0xF6},       {"divide", 0xF7},
      {"oslash", 0xF8},    {"ugrave", 0xF9},     {"uacute", 0xFA},
      {"ucirc", 0xFB},     {"uuml", 0xFC},       {"yacute", 0xFD},
      {"thorn", 0xFE},     {"yuml", 0xFF},       {"OElig", 0x152},
      {"oelig", 0x153},    {"Scaron", 0x160},    {"scaron", 0x161},
      {"Yuml", 0x178},     {"fnof", 0x192},      {"circ", 0x2C6},
      {"tilde", 0x2DC},    {"ensp", 0x2002},     {"emsp", 0x2003},
      {"thinsp", 0x2009},  {"zwnj", 0x200C},     {"zwj", 0x200D},
      {"lrm", 0x200E},     {"rlm", 0x200F},      {"ndash", 0x2013},
      {"mdash", 0x2014},   {"lsquo", 0x2018},    {"rsquo", 0x2019},
      {"sbquo", 0x201A},   {"ldquo", 0x201C},    {"rdquo", 0x201D},
      {"bdquo", 0x201E},   {"dagger", 0x2020},   {"Dagger", 0x2021},
      {"bull", 0x2022},    {"hellip", 0x2026},   {"permil", 0x2030},
      {"prime", 0x2032},   {"Prime", 0x2033},    {"lsaquo", 0x2039},
      {"rsaquo", 0x203A},  {"oline", 0x203E},    {"frasl", 0x2044},
      {"euro", 0x20AC},    {"trade", 0x2122},    {"larr", 0x2190},
      {"uarr", 0x2191},    {"rarr", 0x2192},     {"darr", 0x2193},
      {"harr", 0x2194},    {"minus", 0x2212},    {"le", 0x2264},
      {"ge", 0x2265},      {"ne", 0x2260},       {"asymp", 0x2248},
      {"infin", 0x221E},
  };
  return kEntities;
}

// References that browsers accept without a trailing semicolon.
bool IsLegacyEntity(std::string_view name) {
  return name == "amp" || name == "lt" || name == "gt" || name == "quot" ||
         name == "nbsp" || name == "copy" || name == "reg";
}

// Numeric references in 0x80-0x9F are interpreted as Windows-1252.
char32_t FixNumericReference(unsigned long cp) {
  static const std::array<char32_t, 32> kCp1252 = {
      0x20AC, 0xFFFD, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
      0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0xFFFD, 0x017D, 0xFFFD,
      0xFFFD, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
      0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0xFFFD, 0x017E, 0x0178};
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0xFFFD;
  }
  if (cp >= 0x80 && cp <= 0x9F) return kCp1252[cp - 0x80];
  return static_cast<char32_t>(cp);
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsAsciiAlnum(char c) { return IsAsciiAlpha(c) || (c >= '0' && c <= '9'); }

bool IsHtmlSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

// Case-insensitive search for "</tag" starting at pos.
std::size_t FindEndTag(std::string_view html, std::size_t pos,
                       std::string_view tag) {
  while (true) {
    std::size_t lt = html.find("</", pos);
    if (lt == std::string_view::npos) return html.size();
    std::size_t name_start = lt + 2;
    if (name_start + tag.size() <= html.size() &&
        AsciiLower(html.substr(name_start, tag.size())) == tag) {
      std::size_t after = name_start + tag.size();
      if (after == html.size() || !IsAsciiAlnum(html[after])) return lt;
    }
    pos = lt + 2;
  }
}

const std::unordered_set<std::string_view> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img", "input", "keygen",
    "link", "meta", "param", "source", "track", "wbr"};

const std::unordered_set<std::string_view> kRawTextElements = {
    "script", "style", "xmp", "iframe", "noembed", "noframes"};

const std::unordered_set<std::string_view> kRcDataElements = {"title",
                                                              "textarea"};

// Start tags that implicitly close an open <p>.
const std::unordered_set<std::string_view> kClosesParagraph = {
    "address", "article", "aside", "blockquote", "center", "details",
    "dialog", "dir", "div", "dl", "fieldset", "figcaption", "figure",
    "footer", "form", "h1", "h2", "h3", "h4", "h5", "h6", "header",
    "hgroup", "hr", "li", "main", "menu", "nav", "ol", "p", "pre",
    "section", "table", "ul", "dd", "dt"};

const std::unordered_set<std::string_view> kScopeBoundaries = {
    "applet", "caption", "html", "table", "td", "th", "marquee", "object",
    "template", "button"};

bool IsHeading(std::string_view tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

class TreeBuilder {
 public:
  TreeBuilder() : document_(std::make_unique<HtmlNode>()) {
    document_->type = HtmlNode::Type::kDocument;
    stack_.push_back(document_.get());
  }

  void Text(std::string text) {
    if (text.empty()) return;
    HtmlNode *current = stack_.back();
    if (!current->children.empty() && current->children.back()->is_text()) {
      current->children.back()->text += text;
      return;
    }
    auto node = std::make_unique<HtmlNode>();
    node->type = HtmlNode::Type::kText;
    node->text = std::move(text);
    node->parent = current;
    current->children.push_back(std::move(node));
  }

  // Returns the new element; it is left open unless void.
  HtmlNode *StartTag(std::string tag,
                     std::vector<std::pair<std::string, std::string>> attrs,
                     bool self_closing) {
    if (kClosesParagraph.count(tag)) CloseInScope("p", {});
    if (tag == "li") CloseInScope("li", {"ul", "ol"});
    if (tag == "dt" || tag == "dd") {
      CloseInScope("dt", {"dl"});
      CloseInScope("dd", {"dl"});
    }
    if (tag == "tr") CloseInScope("tr", {"table", "tbody", "thead", "tfoot"});
    if (tag == "td" || tag == "th") {
      CloseInScope("td", {"tr", "table"});
      CloseInScope("th", {"tr", "table"});
    }
    if (tag == "option") CloseInScope("option", {"select"});
    if (IsHeading(tag) && IsHeading(stack_.back()->tag)) stack_.pop_back();

    auto node = std::make_unique<HtmlNode>();
    node->type = HtmlNode::Type::kElement;
    node->tag = std::move(tag);
    node->attributes = std::move(attrs);
    HtmlNode *current = stack_.back();
    node->parent = current;
    HtmlNode *raw = node.get();
    current->children.push_back(std::move(node));
    if (!self_closing && !kVoidElements.count(raw->tag)) stack_.push_back(raw);
    return raw;
  }

  void EndTag(const std::string &tag) {
    for (std::size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag == tag) {
        stack_.resize(i);
        return;
      }
    }
  }

  std::unique_ptr<HtmlNode> Finish() { return std::move(document_); }

 private:
  // Pops through `tag` if it is open below the nearest boundary element.
  void CloseInScope(std::string_view tag,
                    std::initializer_list<std::string_view> boundaries) {
    for (std::size_t i = stack_.size(); i-- > 1;) {
      const std::string &open = stack_[i]->tag;
      if (open == tag) {
        stack_.resize(i);
        return;
      }
      if (kScopeBoundaries.count(open)) return;
      if (std::find(boundaries.begin(), boundaries.end(), open) !=
          boundaries.end()) {
        return;
      }
    }
  }

  std::unique_ptr<HtmlNode> document_;
  std::vector<HtmlNode *> stack_;
};

}  // namespace

const std::string *HtmlNode::Attribute(std::string_view name) const {
  for (const auto &[key, value] : attributes) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c != '&') {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (j < text.size() && text[j] == '#') {
      ++j;
      bool hex = j < text.size() && (text[j] == 'x' || text[j] == 'X');
      if (hex) ++j;
      std::size_t digits_start = j;
      unsigned long value = 0;
      while (j < text.size() &&
             (hex ? std::isxdigit(static_cast<unsigned char>(text[j]))
                  : std::isdigit(static_cast<unsigned char>(text[j])))) {
        int digit = std::isdigit(static_cast<unsigned char>(text[j]))
                        ? text[j] - '0'
                        : (std::tolower(static_cast<unsigned char>(text[j])) -
                           'a' + 10);
        if (value <= 0x10FFFF) value = value * (hex ? 16 : 10) + digit;
        ++j;
      }
      if (j == digits_start) {
        out.push_back('&');
        ++i;
        continue;
      }
      if (j < text.size() && text[j] == ';') ++j;
      out += Utf8Encode(FixNumericReference(value));
      i = j;
      continue;
    }
    while (j < text.size() && IsAsciiAlnum(text[j]) && j - i <= 32) ++j;
    std::string_view name = text.substr(i + 1, j - i - 1);
    bool terminated = j < text.size() && text[j] == ';';
    auto it = NamedEntities().find(name);
    if (it != NamedEntities().end() && (terminated || IsLegacyEntity(name))) {
      out += Utf8Encode(it->second);
      i = terminated ? j + 1 : j;
      continue;
    }
    out.push_back('&');
    ++i;
  }
  return out;
}

std::unique_ptr<HtmlNode> ParseHtml(std::string_view html) {
  TreeBuilder builder;
  std::size_t pos = 0;
  std::string pending_text;
  const auto flush_text = [&]() {
    if (!pending_text.empty()) {
      builder.Text(DecodeEntities(pending_text));
      pending_text.clear();
    }
  };

  while (pos < html.size()) {
    if (html[pos] != '<') {
      std::size_t next = html.find('<', pos);
      if (next == std::string_view::npos) next = html.size();
      pending_text.append(html.substr(pos, next - pos));
      pos = next;
      continue;
    }
    // Comment.
    if (html.compare(pos, 4, "<!--") == 0) {
      flush_text();
      std::size_t end = html.find("-->", pos + 4);
      pos = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    // Doctype, CDATA or processing instruction.
    if (pos + 1 < html.size() && (html[pos + 1] == '!' || html[pos + 1] == '?')) {
      flush_text();
      std::size_t end = html.find('>', pos);
      pos = end == std::string_view::npos ? html.size() : end + 1;
      continue;
    }
    // End tag.
    if (pos + 2 < html.size() && html[pos + 1] == '/' &&
        IsAsciiAlpha(html[pos + 2])) {
      flush_text();
      std::size_t name_end = pos + 2;
      while (name_end < html.size() &&
             (IsAsciiAlnum(html[name_end]) || html[name_end] == '-' ||
              html[name_end] == ':')) {
        ++name_end;
      }
      std::string name = AsciiLower(html.substr(pos + 2, name_end - pos - 2));
      std::size_t end = html.find('>', name_end);
      pos = end == std::string_view::npos ? html.size() : end + 1;
      builder.EndTag(name);
      continue;
    }
    // Start tag.
    if (pos + 1 < html.size() && IsAsciiAlpha(html[pos + 1])) {
      flush_text();
      std::size_t i = pos + 1;
      while (i < html.size() && (IsAsciiAlnum(html[i]) || html[i] == '-' ||
                                 html[i] == ':')) {
        ++i;
      }
      std::string name = AsciiLower(html.substr(pos + 1, i - pos - 1));
      std::vector<std::pair<std::string, std::string>> attrs;
      bool self_closing = false;
      while (i < html.size()) {
        while (i < html.size() && IsHtmlSpace(html[i])) ++i;
        if (i >= html.size()) break;
        if (html[i] == '>') {
          ++i;
          break;
        }
        if (html[i] == '/') {
          if (i + 1 < html.size() && html[i + 1] == '>') {
            self_closing = true;
            i += 2;
            break;
          }
          ++i;
          continue;
        }
        std::size_t attr_start = i;
        while (i < html.size() && !IsHtmlSpace(html[i]) && html[i] != '=' &&
               html[i] != '>' && html[i] != '/') {
          ++i;
        }
        std::string attr_name =
            AsciiLower(html.substr(attr_start, i - attr_start));
        if (attr_name.empty()) {
          ++i;
          continue;
        }
        while (i < html.size() && IsHtmlSpace(html[i])) ++i;
        std::string value;
        if (i < html.size() && html[i] == '=') {
          ++i;
          while (i < html.size() && IsHtmlSpace(html[i])) ++i;
          if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
            char quote = html[i++];
            std::size_t close = html.find(quote, i);
            if (close == std::string_view::npos) close = html.size();
            value = DecodeEntities(html.substr(i, close - i));
            i = std::min(close + 1, html.size());
          } else {
            std::size_t value_start = i;
            while (i < html.size() && !IsHtmlSpace(html[i]) &&
                   html[i] != '>') {
              ++i;
            }
            value = DecodeEntities(html.substr(value_start, i - value_start));
          }
        }
        attrs.emplace_back(std::move(attr_name), std::move(value));
      }
      pos = i;
      builder.StartTag(name, std::move(attrs), self_closing);
      if (!self_closing &&
          (kRawTextElements.count(name) || kRcDataElements.count(name))) {
        std::size_t end = FindEndTag(html, pos, name);
        std::string_view content = html.substr(pos, end - pos);
        builder.Text(kRcDataElements.count(name) ? DecodeEntities(content)
                                                 : std::string(content));
        builder.EndTag(name);
        std::size_t close = html.find('>', end);
        pos = close == std::string_view::npos ? html.size() : close + 1;
      }
      continue;
    }
    // A lone '<' is text.
    pending_text.push_back('<');
    ++pos;
  }
  flush_text();
  return builder.Finish();
}

}  // namespace newsalyze

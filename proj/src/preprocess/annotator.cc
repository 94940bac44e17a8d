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

#include "newsalyze/preprocess/annotator.h"

#include <cstdio>
#include <unordered_set>

#include "newsalyze/base/utf8.h"

namespace newsalyze {

namespace {

bool IsTerminator(char32_t ch) { return ch == '.' || ch == '!' || ch == '?'; }

bool IsClosingMark(char32_t ch) {
  switch (ch) {
    case '"': case '\'': case ')': case ']': case 0x201D: case 0x2019:
    case 0xBB: case 0x203A:
      return true;
    default:
      return false;
  }
}

bool IsOpeningMark(char32_t ch) {
  switch (ch) {
    case '"': case '\'': case '(': case '[': case 0x201C: case 0x2018:
    case 0xAB: case 0x2039:
      return true;
    default:
      return false;
  }
}

// The word that ends right before position `dot`, stripped of leading
// punctuation.
std::u32string_view WordBefore(std::u32string_view text, std::size_t start,
                               std::size_t dot) {
  std::size_t b = dot;
  while (b > start && !IsSpace(text[b - 1])) --b;
  while (b < dot && !IsWordChar(text[b])) ++b;
  return text.substr(b, dot - b);
}

// Matches single letters separated by periods, e.g. "U.S" or "J".
bool IsInitialism(std::u32string_view core) {
  if (core.empty() || core.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < core.size(); ++i) {
    if (i % 2 == 0 ? !IsWordChar(core[i]) || IsDigit(core[i])
                   : core[i] != '.') {
      return false;
    }
  }
  return true;
}

bool EndsWithPossessive(std::u32string_view text) {
  return text.size() > 2 && (text[text.size() - 2] == '\'' ||
                             text[text.size() - 2] == 0x2019) &&
         (text.back() == 's' || text.back() == 'S');
}

std::string StripPossessive(const std::string &surface) {
  std::u32string text = Utf8Decode(surface);
  if (EndsWithPossessive(text)) text.resize(text.size() - 2);
  return Utf8Encode(text);
}

bool IsParticle(const Token &token) {
  return token.surface == "of" || token.surface == "the" ||
         token.surface == "for";
}

bool IsPronoun(const Token &token) {
  static const std::unordered_set<std::string> kPronouns = {
      "I", "He", "She", "It", "We", "They", "You", "Him", "Her", "His",
      "Its", "Them", "Their", "Our", "Your", "My", "Me", "Theirs", "Hers",
      "Ours", "Yours", "Mine", "Himself", "Herself", "Itself", "Themselves"};
  return kPronouns.count(token.surface) > 0;
}

bool IsNameToken(const Token &token) {
  return token.is_capitalized && !IsPronoun(token);
}

}  // namespace

std::vector<Sentence> Segment(std::u32string_view body,
                              const WordList &abbreviations) {
  std::vector<Sentence> sentences;
  const auto emit = [&](std::size_t start, std::size_t end) {
    while (end > start && IsSpace(body[end - 1])) --end;
    if (end > start) {
      Sentence sentence;
      sentence.index = static_cast<int>(sentences.size());
      sentence.span = {start, end};
      sentences.push_back(sentence);
    }
  };

  std::size_t paragraph_start = 0;
  while (paragraph_start <= body.size()) {
    std::size_t paragraph_end = body.find(U'\n', paragraph_start);
    if (paragraph_end == std::u32string_view::npos) paragraph_end = body.size();

    std::size_t start = paragraph_start;
    while (start < paragraph_end && IsSpace(body[start])) ++start;
    std::size_t i = start;
    while (i < paragraph_end) {
      if (!IsTerminator(body[i])) {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j < paragraph_end &&
             (IsTerminator(body[j]) || IsClosingMark(body[j]))) {
        ++j;
      }
      if (j >= paragraph_end || !IsSpace(body[j])) {
        i = j;
        continue;
      }
      std::size_t k = j;
      while (k < paragraph_end && IsSpace(body[k])) ++k;
      bool next_ok = k < paragraph_end &&
                     (IsUpper(body[k]) || IsDigit(body[k]) ||
                      IsOpeningMark(body[k]));
      bool abbreviation = body[i] == '.' && j == i + 1 &&
                          abbreviations.Contains(Utf8Encode(
                              WordBefore(body, start, i)));
      if (next_ok && !abbreviation) {
        emit(start, j);
        start = k;
      }
      i = k;
    }
    emit(start, paragraph_end);
    paragraph_start = paragraph_end + 1;
  }
  return sentences;
}

std::vector<Token> Tokenize(std::u32string_view text, Span span,
                            const WordList &abbreviations) {
  std::vector<Token> tokens;
  const auto emit = [&](std::size_t a, std::size_t b) {
    Token token;
    token.index = static_cast<int>(tokens.size());
    token.span = {a, b};
    token.surface = Utf8Encode(text.substr(a, b - a));
    token.is_capitalized = IsUpper(text[a]);
    tokens.push_back(std::move(token));
  };

  std::size_t end = std::min(span.end, text.size());
  std::size_t pos = span.start;
  while (pos < end) {
    while (pos < end && IsSpace(text[pos])) ++pos;
    if (pos >= end) break;
    std::size_t chunk_end = pos;
    while (chunk_end < end && !IsSpace(text[chunk_end])) ++chunk_end;

    std::size_t a = pos;
    while (a < chunk_end && !IsWordChar(text[a])) {
      emit(a, a + 1);
      ++a;
    }
    if (a < chunk_end) {
      std::size_t e = chunk_end;
      while (e > a && !IsWordChar(text[e - 1])) --e;
      if (e < chunk_end && text[e] == '.') {
        std::u32string_view core = text.substr(a, e - a);
        if (abbreviations.Contains(Utf8Encode(core)) || IsInitialism(core)) {
          ++e;
        }
      }
      emit(a, e);
      for (std::size_t t = e; t < chunk_end; ++t) emit(t, t + 1);
    }
    pos = chunk_end;
  }

  bool seen_word = false;
  for (Token &token : tokens) {
    bool word = IsWordChar(text[token.span.start]);
    token.is_sentence_initial = word && !seen_word;
    seen_word = seen_word || word;
  }
  return tokens;
}

std::vector<Token> Tokenize(std::u32string_view text,
                            const WordList &abbreviations) {
  return Tokenize(text, Span{0, text.size()}, abbreviations);
}

void CollectRecurrentSurfaces(const std::vector<Token> &tokens,
                              std::set<std::string> *surfaces) {
  for (const Token &token : tokens) {
    if (token.is_capitalized && !token.is_sentence_initial) {
      surfaces->insert(StripPossessive(token.surface));
    }
  }
}

std::vector<Mention> DetectMentions(const std::vector<Token> &tokens,
                                    std::u32string_view body,
                                    const Gazetteer &gazetteer,
                                    const std::set<std::string> &recurrent) {
  std::vector<Mention> mentions;
  const auto slice = [&](std::size_t first, std::size_t last) {
    std::size_t start = tokens[first].span.start;
    std::size_t end = tokens[last].span.end;
    std::u32string_view text = body.substr(start, end - start);
    if (EndsWithPossessive(text)) end -= 2;
    return Span{start, end};
  };
  const auto surface_of = [&](Span span) {
    return Utf8Encode(body.substr(span.start, span.length()));
  };

  std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    if (!IsNameToken(tokens[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (true) {
      if (j + 1 < n && IsNameToken(tokens[j + 1])) {
        ++j;
      } else if (j + 2 < n && IsParticle(tokens[j + 1]) &&
                 IsNameToken(tokens[j + 2])) {
        j += 2;
      } else {
        break;
      }
    }
    std::size_t first = i;
    std::size_t last = j;
    i = j + 1;

    if (tokens[first].is_sentence_initial) {
      std::string first_surface = StripPossessive(tokens[first].surface);
      bool qualifies = gazetteer.Contains(surface_of(slice(first, last))) ||
                       gazetteer.Contains(first_surface) ||
                       recurrent.count(first_surface) > 0;
      if (!qualifies) {
        ++first;
        while (first <= last && IsParticle(tokens[first])) ++first;
        if (first > last) continue;
      }
    }

    Mention mention;
    mention.span = slice(first, last);
    mention.surface = surface_of(mention.span);
    mention.head = StripPossessive(tokens[last].surface);
    mention.kind = MentionKind::kOther;
    for (std::size_t t = first; t <= last; ++t) {
      if (auto kind = gazetteer.Find(surface_of(slice(t, last)))) {
        mention.kind = *kind;
        break;
      }
    }
    mentions.push_back(std::move(mention));
  }
  return mentions;
}

std::string MakeMentionId(const std::string &article_id, std::size_t index) {
  char suffix[32];
  std::snprintf(suffix, sizeof(suffix), "-m%05zu", index);
  return article_id + suffix;
}

ProcessedArticle SegmentAndTokenize(const Article &article,
                                    const PreprocessResources &resources) {
  ProcessedArticle processed;
  processed.article_id = article.article_id;
  processed.body = Utf8Decode(article.body);
  processed.sentences = Segment(processed.body, resources.abbreviations);
  for (Sentence &sentence : processed.sentences) {
    sentence.article_id = article.article_id;
    processed.tokens.push_back(
        Tokenize(processed.body, sentence.span, resources.abbreviations));
  }
  return processed;
}

std::vector<ProcessedArticle> PreprocessTopic(
    const std::vector<Article> &articles,
    const PreprocessResources &resources) {
  std::vector<ProcessedArticle> processed;
  std::set<std::string> recurrent;
  for (const Article &article : articles) {
    processed.push_back(SegmentAndTokenize(article, resources));
    for (const auto &tokens : processed.back().tokens) {
      CollectRecurrentSurfaces(tokens, &recurrent);
    }
  }
  for (ProcessedArticle &doc : processed) {
    for (const Sentence &sentence : doc.sentences) {
      for (Mention &mention :
           DetectMentions(doc.tokens[sentence.index], doc.body,
                          resources.gazetteer, recurrent)) {
        mention.article_id = doc.article_id;
        mention.sentence_index = sentence.index;
        mention.mention_id = MakeMentionId(doc.article_id, doc.mentions.size());
        doc.mentions.push_back(std::move(mention));
      }
    }
  }
  return processed;
}

}  // namespace newsalyze

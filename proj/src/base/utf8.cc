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

#include "newsalyze/base/utf8.h"

namespace newsalyze {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one scalar value starting at text[*pos] and advances *pos.
char32_t DecodeOne(std::string_view text, std::size_t *pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char lead = byte(*pos);
  if (lead < 0x80) {
    ++*pos;
    return lead;
  }
  int extra;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
    min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
    min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
    min = 0x10000;
  } else {
    ++*pos;
    return kReplacement;
  }
  // A truncated or interrupted sequence becomes one replacement character
  // covering the lead byte and the continuation bytes seen so far.
  for (int i = 1; i <= extra; ++i) {
    if (*pos + i >= text.size() || (byte(*pos + i) & 0xC0) != 0x80) {
      *pos += i;
      return kReplacement;
    }
    cp = (cp << 6) | (byte(*pos + i) & 0x3F);
  }
  *pos += extra + 1;
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return kReplacement;
  }
  return cp;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::u32string Utf8Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(DecodeOne(text, &pos));
  return out;
}

std::string Utf8Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) AppendUtf8(cp, &out);
  return out;
}

std::string Utf8Encode(char32_t ch) {
  std::string out;
  AppendUtf8(ch, &out);
  return out;
}

std::size_t Utf8Length(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    DecodeOne(text, &pos);
    ++n;
  }
  return n;
}

std::string Utf8Substr(std::string_view text, std::size_t start,
                       std::size_t end) {
  std::string out;
  std::size_t index = 0;
  std::size_t pos = 0;
  while (pos < text.size() && index < end) {
    char32_t cp = DecodeOne(text, &pos);
    if (index >= start) AppendUtf8(cp, &out);
    ++index;
  }
  return out;
}

std::string Utf8Sanitize(std::string_view text) {
  return Utf8Encode(Utf8Decode(text));
}

bool IsSpace(char32_t ch) {
  switch (ch) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return ch >= 0x2000 && ch <= 0x200B;
  }
}

bool IsUpper(char32_t ch) {
  if (ch < 0x80) return ch >= 'A' && ch <= 'Z';
  if (ch >= 0xC0 && ch <= 0xDE) return ch != 0xD7;
  if (ch >= 0x100 && ch <= 0x137) return ch % 2 == 0;
  if (ch >= 0x139 && ch <= 0x148) return ch % 2 == 1;
  if (ch >= 0x14A && ch <= 0x177) return ch % 2 == 0;
  if (ch == 0x178 || ch == 0x179 || ch == 0x17B || ch == 0x17D) return true;
  if (ch >= 0x391 && ch <= 0x3AB) return ch != 0x3A2;
  if (ch >= 0x400 && ch <= 0x42F) return true;
  return false;
}

bool IsDigit(char32_t ch) { return ch >= '0' && ch <= '9'; }

bool IsWordChar(char32_t ch) {
  if (ch < 0x80) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9');
  }
  if (ch < 0xC0) return ch == 0xAA || ch == 0xB5 || ch == 0xBA;
  if (ch == 0xD7 || ch == 0xF7) return false;
  if (ch >= 0x2000 && ch <= 0x2BFF) return false;
  if (ch >= 0x3000 && ch <= 0x303F) return false;
  if (ch >= 0xFE30 && ch <= 0xFE6F) return false;
  if (ch >= 0xFF00 && ch <= 0xFF0F) return false;
  if (ch == kReplacement) return false;
  return !IsSpace(ch);
}

char32_t ToLower(char32_t ch) {
  if (!IsUpper(ch)) return ch;
  if (ch < 0x80) return ch + 32;
  if (ch <= 0xDE) return ch + 32;
  if (ch == 0x178) return 0xFF;
  if (ch < 0x180) return ch + 1;
  if (ch >= 0x391 && ch <= 0x3AB) return ch + 32;
  if (ch >= 0x400 && ch <= 0x40F) return ch + 80;
  if (ch >= 0x410 && ch <= 0x42F) return ch + 32;
  return ch;
}

std::u32string ToLower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t &ch : out) ch = ToLower(ch);
  return out;
}

std::string ToLowerUtf8(std::string_view text) {
  return Utf8Encode(ToLower(Utf8Decode(text)));
}

}  // namespace newsalyze

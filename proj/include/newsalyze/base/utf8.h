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

#ifndef NEWSALYZE_BASE_UTF8_H_
#define NEWSALYZE_BASE_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

// UTF-8 helpers. All character offsets exchanged between components count
// Unicode scalar values, so text is decoded to UTF-32 for span arithmetic.

namespace newsalyze {

// Decodes UTF-8. Malformed sequences decode to U+FFFD.
std::u32string Utf8Decode(std::string_view text);

std::string Utf8Encode(std::u32string_view text);
std::string Utf8Encode(char32_t ch);

// Number of scalar values in a UTF-8 string.
std::size_t Utf8Length(std::string_view text);

// Substring by scalar-value offsets [start, end). Clamps to the text.
std::string Utf8Substr(std::string_view text, std::size_t start,
                       std::size_t end);

// Replaces malformed sequences with U+FFFD.
std::string Utf8Sanitize(std::string_view text);

// Character classes. These cover ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic, which is what the shipped resources need.
bool IsSpace(char32_t ch);
bool IsUpper(char32_t ch);
bool IsDigit(char32_t ch);
// Letters and digits. Everything else counts as punctuation.
bool IsWordChar(char32_t ch);
char32_t ToLower(char32_t ch);

std::u32string ToLower(std::u32string_view text);
std::string ToLowerUtf8(std::string_view text);

}  // namespace newsalyze

#endif  // NEWSALYZE_BASE_UTF8_H_

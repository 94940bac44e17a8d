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

#ifndef NEWSALYZE_TSC_LEXICON_H_
#define NEWSALYZE_TSC_LEXICON_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace newsalyze {

struct LexiconEntry {
  std::string term;
  double polarity = 0.0;
};

// Opinion lexicon: lowercase term -> polarity in [-1, 1].
// File format: term<TAB>polarity, one entry per line.
class Lexicon {
 public:
  static Lexicon Load(const std::filesystem::path &path);

  // Throws Error(kValidation) for duplicate terms, uppercase terms or
  // polarities outside [-1, 1].
  void Add(const LexiconEntry &entry);

  std::optional<double> Find(std::string_view lowercase_term) const;
  std::size_t size() const { return entries_.size(); }

  // Copy with every polarity negated.
  Lexicon Reversed() const;

 private:
  std::unordered_map<std::string, double> entries_;
};

}  // namespace newsalyze

#endif  // NEWSALYZE_TSC_LEXICON_H_

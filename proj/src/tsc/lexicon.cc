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

#include "newsalyze/tsc/lexicon.h"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "newsalyze/base/errors.h"
#include "newsalyze/base/files.h"
#include "newsalyze/base/utf8.h"

namespace newsalyze {

Lexicon Lexicon::Load(const std::filesystem::path &path) {
  Lexicon lexicon;
  for (const std::string &line : ReadDataLines(path)) {
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kValidation,
                  path.string() + ": expected term<TAB>polarity: " + line);
    }
    std::string value = line.substr(tab + 1);
    char *end = nullptr;
    double polarity = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
      throw Error(ErrorCode::kValidation,
                  path.string() + ": bad polarity: " + line);
    }
    lexicon.Add({line.substr(0, tab), polarity});
  }
  return lexicon;
}

void Lexicon::Add(const LexiconEntry &entry) {
  if (entry.term.empty() || ToLowerUtf8(entry.term) != entry.term) {
    throw Error(ErrorCode::kValidation,
                "lexicon term must be nonempty lowercase: '" + entry.term + "'");
  }
  if (!(entry.polarity >= -1.0 && entry.polarity <= 1.0)) {
    throw Error(ErrorCode::kValidation,
                "lexicon polarity out of [-1,1] for '" + entry.term + "'");
  }
  if (!entries_.emplace(entry.term, entry.polarity).second) {
    throw Error(ErrorCode::kValidation,
                "duplicate lexicon term '" + entry.term + "'");
  }
}

std::optional<double> Lexicon::Find(std::string_view lowercase_term) const {
  auto it = entries_.find(std::string(lowercase_term));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Lexicon Lexicon::Reversed() const {
  Lexicon reversed;
  for (const auto &[term, polarity] : entries_) {
    reversed.entries_.emplace(term, -polarity);
  }
  return reversed;
}

}  // namespace newsalyze

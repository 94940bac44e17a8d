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

#include "newsalyze/preprocess/resources.h"

#include "newsalyze/base/errors.h"
#include "newsalyze/base/files.h"
#include "newsalyze/base/utf8.h"

namespace newsalyze {

WordList::WordList(std::initializer_list<std::string_view> words) {
  for (std::string_view word : words) Add(word);
}

WordList WordList::Load(const std::filesystem::path &path) {
  WordList list;
  for (const std::string &line : ReadDataLines(path)) list.Add(line);
  return list;
}

void WordList::Add(std::string_view word) {
  if (!word.empty() && word.back() == '.') word.remove_suffix(1);
  if (!word.empty()) words_.insert(ToLowerUtf8(word));
}

bool WordList::Contains(std::string_view word) const {
  if (!word.empty() && word.back() == '.') word.remove_suffix(1);
  return words_.count(ToLowerUtf8(word)) > 0;
}

Gazetteer Gazetteer::Load(const std::filesystem::path &path) {
  Gazetteer gazetteer;
  int line_number = 0;
  for (const std::string &line : ReadDataLines(path)) {
    ++line_number;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kValidation,
                  path.string() + ": expected surface<TAB>kind in entry " +
                      std::to_string(line_number));
    }
    gazetteer.Add(line.substr(0, tab), ParseMentionKind(line.substr(tab + 1)));
  }
  return gazetteer;
}

void Gazetteer::Add(std::string surface, MentionKind kind) {
  entries_[std::move(surface)] = kind;
}

std::optional<MentionKind> Gazetteer::Find(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace newsalyze

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

#ifndef NEWSALYZE_PREPROCESS_RESOURCES_H_
#define NEWSALYZE_PREPROCESS_RESOURCES_H_

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "newsalyze/store/types.h"

namespace newsalyze {

// Case-insensitive word set loaded from a line-per-entry data file. A
// trailing period on an entry is ignored, so "Mr." and "Mr" are equivalent.
class WordList {
 public:
  WordList() = default;
  WordList(std::initializer_list<std::string_view> words);

  static WordList Load(const std::filesystem::path &path);

  void Add(std::string_view word);
  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Known entity surfaces with their kind. File format: surface<TAB>kind.
// Lookups are case-sensitive.
class Gazetteer {
 public:
  static Gazetteer Load(const std::filesystem::path &path);

  void Add(std::string surface, MentionKind kind);
  std::optional<MentionKind> Find(std::string_view surface) const;
  bool Contains(std::string_view surface) const {
    return Find(surface).has_value();
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, MentionKind> entries_;
};

}  // namespace newsalyze

#endif  // NEWSALYZE_PREPROCESS_RESOURCES_H_

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

#include "newsalyze/concepts/concepts.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "newsalyze/base/utf8.h"

namespace newsalyze {

namespace {

std::vector<std::u32string> SplitWords(std::u32string_view text) {
  std::vector<std::u32string> words;
  std::u32string word;
  for (char32_t ch : text) {
    if (IsSpace(ch)) {
      if (!word.empty()) words.push_back(std::move(word));
      word.clear();
    } else {
      word.push_back(ch);
    }
  }
  if (!word.empty()) words.push_back(std::move(word));
  return words;
}

bool IsArticleWord(std::u32string_view word) {
  return word == U"the" || word == U"a" || word == U"an";
}

char32_t ToUpperAscii(char32_t ch) {
  return ch >= 'a' && ch <= 'z' ? ch - 32 : ch;
}

std::string WithoutPeriods(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != '.') out.push_back(c);
  }
  return out;
}

bool IsAllUpper(std::string_view text) {
  std::u32string decoded = Utf8Decode(text);
  return !decoded.empty() &&
         std::all_of(decoded.begin(), decoded.end(), IsUpper);
}

// `abbreviation` (periods removed) spells the initials of `expansion`.
bool AbbreviationOf(const std::string &abbreviation,
                    const std::string &expansion) {
  std::string letters = WithoutPeriods(abbreviation);
  if (Utf8Length(letters) < 2 || !IsAllUpper(letters)) return false;
  if (SplitWords(Utf8Decode(expansion)).size() < 2) return false;
  return Initialism(expansion, false) == letters ||
         Initialism(expansion, true) == letters;
}

// Union-find over mention indices with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root wins so roots are independent of union order.
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string Normalize(std::string_view surface, const WordList &honorifics) {
  std::u32string text = ToLower(Utf8Decode(surface));
  while (!text.empty() && IsSpace(text.back())) text.pop_back();
  if (text.size() > 2 && (text[text.size() - 2] == '\'' ||
                          text[text.size() - 2] == 0x2019) &&
      text.back() == 's') {
    text.resize(text.size() - 2);
  }
  std::vector<std::u32string> words = SplitWords(text);
  std::size_t first = 0;
  while (words.size() - first > 1 &&
         (IsArticleWord(words[first]) ||
          honorifics.Contains(Utf8Encode(words[first])))) {
    ++first;
  }
  std::u32string joined;
  for (std::size_t i = first; i < words.size(); ++i) {
    if (!joined.empty()) joined.push_back(' ');
    joined += words[i];
  }
  return Utf8Encode(joined);
}

std::size_t EditDistance(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> previous(b.size() + 1);
  std::vector<std::size_t> current(b.size() + 1);
  std::iota(previous.begin(), previous.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    current[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t substitution = previous[j - 1] + (a[i - 1] != b[j - 1]);
      current[j] = std::min({previous[j] + 1, current[j - 1] + 1, substitution});
    }
    std::swap(previous, current);
  }
  return previous[b.size()];
}

double EditSimilarity(std::string_view a, std::string_view b) {
  std::u32string x = Utf8Decode(a);
  std::u32string y = Utf8Decode(b);
  std::size_t longest = std::max(x.size(), y.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(EditDistance(x, y)) /
                   static_cast<double>(longest);
}

std::string Initialism(std::string_view surface, bool skip_particles) {
  std::u32string letters;
  for (const std::u32string &word : SplitWords(Utf8Decode(surface))) {
    if (skip_particles && (word == U"of" || word == U"the" ||
                           word == U"for" || word == U"and")) {
      continue;
    }
    auto first = std::find_if(word.begin(), word.end(), IsWordChar);
    if (first != word.end()) letters.push_back(ToUpperAscii(*first));
  }
  return Utf8Encode(letters);
}

std::string CanonicalSurface(const std::vector<std::string> &surfaces) {
  std::map<std::string, int> counts;
  for (const std::string &s : surfaces) ++counts[s];
  const std::string *best = nullptr;
  int best_count = 0;
  std::size_t best_length = 0;
  // Map iteration is lexicographic, so strict comparisons keep the smallest
  // label among ties.
  for (const auto &[surface, count] : counts) {
    std::size_t length = Utf8Length(surface);
    if (best == nullptr || count > best_count ||
        (count == best_count && length > best_length)) {
      best = &surface;
      best_count = count;
      best_length = length;
    }
  }
  return best != nullptr ? *best : std::string();
}

bool ShouldMerge(MergePass pass, const ClusterKey &a, const ClusterKey &b,
                 const ConceptResources &resources, double merge_threshold) {
  switch (pass) {
    case MergePass::kExact:
      return a.normalized == b.normalized;
    case MergePass::kHead: {
      const auto generic = [&](const std::string &head) {
        return resources.ambiguous_heads.Contains(head);
      };
      if (a.normalized_head == b.normalized && !generic(a.normalized_head)) {
        return true;
      }
      if (b.normalized_head == a.normalized && !generic(b.normalized_head)) {
        return true;
      }
      return a.normalized_head == b.normalized_head &&
             !generic(a.normalized_head);
    }
    case MergePass::kAbbreviation:
      return AbbreviationOf(a.surface, b.surface) ||
             AbbreviationOf(b.surface, a.surface);
    case MergePass::kFuzzy:
      return EditSimilarity(a.normalized, b.normalized) >= merge_threshold;
  }
  return false;
}

std::vector<Concept> MergeMentions(const std::vector<Mention> &mentions,
                                   const ConceptResources &resources,
                                   const AnalysisParams &params) {
  // Work in mention-id order so the outcome does not depend on input order.
  std::vector<const Mention *> sorted;
  for (const Mention &m : mentions) sorted.push_back(&m);
  std::sort(sorted.begin(), sorted.end(),
            [](const Mention *a, const Mention *b) {
              return a->mention_id < b->mention_id;
            });
  std::size_t n = sorted.size();
  DisjointSets sets(n);

  std::vector<std::string> normalized(n);
  for (std::size_t i = 0; i < n; ++i) {
    normalized[i] = Normalize(sorted[i]->surface, resources.honorifics);
  }

  const auto current_clusters = [&]() {
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < n; ++i) by_root[sets.Find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> clusters;
    for (auto &[root, members] : by_root) clusters.push_back(std::move(members));
    return clusters;
  };

  // Pass 1 groups identical normal forms; hashing gives the same partition
  // as comparing all pairs.
  {
    std::unordered_map<std::string, std::size_t> first_with_form;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = first_with_form.emplace(normalized[i], i);
      if (!inserted) sets.Union(it->second, i);
    }
  }

  for (MergePass pass :
       {MergePass::kHead, MergePass::kAbbreviation, MergePass::kFuzzy}) {
    std::vector<std::vector<std::size_t>> clusters = current_clusters();
    std::vector<ClusterKey> keys;
    for (const auto &members : clusters) {
      std::vector<std::string> surfaces;
      for (std::size_t i : members) surfaces.push_back(sorted[i]->surface);
      ClusterKey key;
      key.surface = CanonicalSurface(surfaces);
      key.normalized = Normalize(key.surface, resources.honorifics);
      for (std::size_t i : members) {
        if (sorted[i]->surface == key.surface) {
          key.normalized_head = Normalize(sorted[i]->head, resources.honorifics);
          break;
        }
      }
      keys.push_back(std::move(key));
    }
    std::vector<std::size_t> order(clusters.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(keys[a].surface, clusters[a].front()) <
             std::tie(keys[b].surface, clusters[b].front());
    });
    for (std::size_t x = 0; x < order.size(); ++x) {
      for (std::size_t y = x + 1; y < order.size(); ++y) {
        std::size_t a = order[x];
        std::size_t b = order[y];
        if (ShouldMerge(pass, keys[a], keys[b], resources,
                        params.merge_threshold)) {
          sets.Union(clusters[a].front(), clusters[b].front());
        }
      }
    }
  }

  std::vector<Concept> concepts;
  for (const auto &members : current_clusters()) {
    Concept c;
    std::vector<std::string> surfaces;
    for (std::size_t i : members) {
      c.members.push_back(sorted[i]->mention_id);
      ++c.per_article_frequency[sorted[i]->article_id];
      surfaces.push_back(sorted[i]->surface);
    }
    c.frequency = static_cast<int>(c.members.size());
    c.canonical_label = CanonicalSurface(surfaces);
    concepts.push_back(std::move(c));
  }
  SortByRank(&concepts);
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    concepts[i].concept_id = "c" + std::to_string(i + 1);
  }
  return concepts;
}

void SortByRank(std::vector<Concept> *concepts) {
  std::sort(concepts->begin(), concepts->end(),
            [](const Concept &a, const Concept &b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              if (a.per_article_frequency.size() !=
                  b.per_article_frequency.size()) {
                return a.per_article_frequency.size() >
                       b.per_article_frequency.size();
              }
              return a.canonical_label < b.canonical_label;
            });
}

std::vector<Concept> Rank(std::vector<Concept> concepts, std::size_t k) {
  SortByRank(&concepts);
  if (concepts.size() > k) concepts.resize(k);
  return concepts;
}

}  // namespace newsalyze

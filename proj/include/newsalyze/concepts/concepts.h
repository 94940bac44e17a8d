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

#ifndef NEWSALYZE_CONCEPTS_CONCEPTS_H_
#define NEWSALYZE_CONCEPTS_CONCEPTS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "newsalyze/preprocess/resources.h"
#include "newsalyze/store/types.h"

// Cross-document concept resolution: mentions of a topic are merged into
// concepts by a fixed sequence of passes, then ranked by prominence.

namespace newsalyze {

struct ConceptResources {
  // Titles and honorifics stripped from the front of a surface.
  WordList honorifics;
  // Heads too generic to merge on ("department", "house", ...).
  WordList ambiguous_heads;
};

// Normal form of a surface: lowercased, trailing possessive removed, leading
// honorifics and articles stripped (never the last remaining word),
// whitespace collapsed.
std::string Normalize(std::string_view surface, const WordList &honorifics);

// Levenshtein distance over scalar values.
std::size_t EditDistance(std::u32string_view a, std::u32string_view b);

// 1 - distance / max(|a|, |b|); 1.0 for two empty strings.
double EditSimilarity(std::string_view a, std::string_view b);

// Uppercase first letters of the words of a surface ("United States" ->
// "US"). With skip_particles, lowercase "of", "the", "for" and "and" are
// ignored.
std::string Initialism(std::string_view surface, bool skip_particles);

// Most frequent surface; ties go to the longer surface, then the
// lexicographically smaller one.
std::string CanonicalSurface(const std::vector<std::string> &surfaces);

// Identifies the pass that merged two clusters, for diagnostics and tests.
enum class MergePass { kExact = 1, kHead = 2, kAbbreviation = 3, kFuzzy = 4 };

// Cluster summary the pairwise rules are evaluated on: its canonical
// surface, that surface's normal form and the normal form of its head.
struct ClusterKey {
  std::string surface;
  std::string normalized;
  std::string normalized_head;
};

// Pairwise merge rule of one pass. Symmetric.
bool ShouldMerge(MergePass pass, const ClusterKey &a, const ClusterKey &b,
                 const ConceptResources &resources, double merge_threshold);

// Clusters the mentions of a topic. Starting from singletons, the passes
// run in order (exact normal form, head match, abbreviation, fuzzy). Each
// pass evaluates its rule on the cluster keys as they stand at the start of
// the pass, visits candidate pairs in lexicographic order of their canonical
// labels and merges transitively. Concepts come back in rank order with
// concept ids "c1", "c2", ...; members are sorted by mention id.
std::vector<Concept> MergeMentions(const std::vector<Mention> &mentions,
                                   const ConceptResources &resources,
                                   const AnalysisParams &params);

// Sorts by frequency descending, then number of distinct articles
// descending, then canonical label ascending.
void SortByRank(std::vector<Concept> *concepts);

// The first k concepts in rank order.
std::vector<Concept> Rank(std::vector<Concept> concepts, std::size_t k);

}  // namespace newsalyze

#endif  // NEWSALYZE_CONCEPTS_CONCEPTS_H_

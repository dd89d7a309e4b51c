// Copyright 2026 The langsketch Authors.
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

#ifndef LANGSKETCH_MAPPING_SIMILARITY_H_
#define LANGSKETCH_MAPPING_SIMILARITY_H_

#include <string>
#include <string_view>

namespace langsketch::mapping {

// Minimum score for a fuzzy match to count.
inline constexpr double kMatchThreshold = 0.6;

// Lowercase, alphanumerics only, single spaces.
std::string NormalizeForMatch(std::string_view text);

// Inputs are already normalized.
std::size_t EditDistance(std::string_view a, std::string_view b);

// 1 - distance / max length; 1.0 for two empty strings.
double EditSimilarity(std::string_view a, std::string_view b);

// Abbreviation score of `query` against the words of `target`: the query
// (spaces removed) must split into non-empty prefixes of distinct target
// words, in order. Scores 0.9 * used / words when at least two words are
// used, else 0.
double InitialsScore(std::string_view query, std::string_view target);

// Normalizes both sides and takes the max of the edit similarity and the
// initials score in both directions. Symmetric; 1.0 iff the normalized
// strings are equal.
double Similarity(std::string_view a, std::string_view b);

}  // namespace langsketch::mapping

#endif  // LANGSKETCH_MAPPING_SIMILARITY_H_

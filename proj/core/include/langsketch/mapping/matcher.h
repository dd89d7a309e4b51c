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

#ifndef LANGSKETCH_MAPPING_MATCHER_H_
#define LANGSKETCH_MAPPING_MATCHER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langsketch/catalog/catalog.h"
#include "langsketch/catalog/code_index.h"
#include "langsketch/mapping/candidate.h"
#include "langsketch/nlp/tagger.h"

namespace langsketch::mapping {

inline constexpr std::size_t kMaxSuggestions = 8;

// Base scores for inferred candidates, scaled by how well a completed head
// word matches what was typed.
inline constexpr double kCorefScore = 0.9;
inline constexpr double kKindKeywordScore = 0.8;
inline constexpr double kVerbCallScore = 0.7;
inline constexpr double kNounVariableScore = 0.5;

// Number of lexicon completions tried for a partially typed head word.
inline constexpr std::size_t kHeadCompletions = 3;

// Lowercase, non-alphanumerics to '_', joined by '_'. Python keywords get
// a trailing '_' and a leading digit gets a leading '_'.
std::string InferIdentifier(const std::vector<std::string>& words);

// Fuzzy matches against snippet aliases and buffer identifiers, keeping
// scores >= kMatchThreshold, ranked. `index` may be null.
std::vector<Candidate> MatchIndependent(std::string_view phrase_text,
                                        const catalog::SnippetCatalog& catalog,
                                        const catalog::CodeIndex* index);

// True when a candidate list from MatchIndependent makes the phrase an
// independent reference.
bool IsIndependent(std::span<const Candidate> independent);

// Candidates from the phrase's part of speech, kind keywords and
// coreference links to associated phrases.
std::vector<Candidate> InferDependent(
    const nlp::AnalysisState& analysis, const nlp::Phrase& phrase,
    std::span<const Association> associations,
    const nlp::Lexicon& lexicon = nlp::Lexicon::Default());

// Merged, deduplicated (by key, best score kept), ranked and capped
// candidates for the phrase under the cursor.
std::vector<Candidate> Suggest(
    const nlp::AnalysisState& analysis, const catalog::SnippetCatalog& catalog,
    const catalog::CodeIndex* index, std::span<const Association> associations,
    const nlp::Lexicon& lexicon = nlp::Lexicon::Default());

}  // namespace langsketch::mapping

#endif  // LANGSKETCH_MAPPING_MATCHER_H_

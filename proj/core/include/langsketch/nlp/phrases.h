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

#ifndef LANGSKETCH_NLP_PHRASES_H_
#define LANGSKETCH_NLP_PHRASES_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "langsketch/nlp/types.h"

namespace langsketch::nlp {

// A phrase is a NOUN/PROPN/VERB/PRON head plus the contiguous run of
// amod/compound dependents directly before it. Determiners are recorded
// but left out of the span.
std::vector<Phrase> ChunkPhrases(std::string_view prompt_text,
                                 std::span<const Token> tokens,
                                 std::span<const PosTag> tags,
                                 const DependencyTree& tree);

// Keyword group for definition kinds: "function"/"method" -> "function",
// "argument"/"parameter" -> "parameter", plus "class", "variable", "list".
std::optional<std::string_view> KindKeywordGroup(std::string_view word);

// "it"/"this" link to the nearest preceding non-verb, non-pronoun phrase;
// "the <keyword>" (also "this"/"that") links to the nearest preceding phrase
// in the same keyword group.
std::vector<CorefLink> ResolveCoreference(std::span<const Token> tokens,
                                          std::span<const Phrase> phrases,
                                          std::span<const PosTag> tags);

}  // namespace langsketch::nlp

#endif  // LANGSKETCH_NLP_PHRASES_H_

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

#ifndef LANGSKETCH_NLP_TAGGER_H_
#define LANGSKETCH_NLP_TAGGER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "langsketch/nlp/types.h"

namespace langsketch::nlp {

// Open-class word list. Lookups try the exact spelling first, then the
// lowercase form, so "GET" can be a proper noun while "get" is a verb.
class Lexicon {
 public:
  Lexicon() = default;

  // Parses `word<TAB>TAG` lines. Blank lines and lines starting with '#'
  // are skipped. Throws std::invalid_argument naming the line on errors.
  static Lexicon Parse(std::string_view text);
  static Lexicon FromFile(const std::string& path);

  // The lexicon shipped with the library.
  static const Lexicon& Default();

  void Add(std::string word, PosTag tag);
  std::optional<PosTag> Lookup(std::string_view word) const;
  std::optional<PosTag> LookupExact(std::string_view word) const;

  // Open-class words starting with prefix (lowercase), shortest first, then
  // alphabetical. Used to complete partially typed words.
  std::vector<std::pair<std::string, PosTag>> Complete(
      std::string_view prefix, std::size_t limit) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, PosTag> entries_;
  std::vector<std::string> sorted_lower_;
};

// Closed-class words (determiners, prepositions, pronouns, conjunctions,
// auxiliaries). Returns nullopt for open-class words.
std::optional<PosTag> ClosedClassTag(std::string_view lower_word);

// Auxiliaries and modals; they tag as OTHER and attach to the next verb.
bool IsAuxiliary(std::string_view lower_word);
bool IsModal(std::string_view lower_word);
bool IsCopula(std::string_view lower_word);

// Tokens such as "train.csv", "load_img" or "loadImg".
bool LooksLikeIdentifier(std::string_view word);

std::vector<PosTag> TagPos(std::span<const Token> tokens,
                           const Lexicon& lexicon = Lexicon::Default());

// Content words: nouns, proper nouns, verbs, adjectives, numbers.
bool IsContentTag(PosTag tag);

// Sentence segmentation at ".", "!", "?" and ";".
std::vector<Sentence> SplitSentences(std::span<const Token> tokens,
                                     std::span<const PosTag> tags);
bool IsSentenceBoundary(const Token& token, PosTag tag);

}  // namespace langsketch::nlp

#endif  // LANGSKETCH_NLP_TAGGER_H_

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

#ifndef LANGSKETCH_NLP_TYPES_H_
#define LANGSKETCH_NLP_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langsketch::nlp {

// A whitespace/punctuation delimited unit of the prompt. Offsets are byte
// offsets into the prompt, half-open.
struct Token {
  std::size_t index = 0;
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
  bool is_content = false;

  bool operator==(const Token&) const = default;
};

enum class PosTag : std::uint8_t {
  kNoun,
  kPropn,
  kVerb,
  kAdj,
  kAdp,
  kDet,
  kPron,
  kConj,
  kNum,
  kPunct,
  kOther,
};

enum class DepLabel : std::uint8_t {
  kRoot,
  kNsubj,
  kDobj,
  kPobj,
  kPrep,
  kDet,
  kAmod,
  kCompound,
  kConj,
  kCc,
  kAttr,
  kDative,
  kRelcl,
  kOther,
};

std::string_view PosTagName(PosTag tag);
std::optional<PosTag> ParsePosTag(std::string_view name);

// Lowercase names as used in rule files and gold fixtures.
std::string_view DepLabelName(DepLabel label);
std::optional<DepLabel> ParseDepLabel(std::string_view name);

// Head value for the root arc.
inline constexpr std::int32_t kRootHead = -1;

struct Arc {
  std::int32_t head = kRootHead;
  std::int32_t dependent = 0;
  DepLabel label = DepLabel::kOther;
  // Set when the arc came from the fallback attachment path.
  bool fallback = false;

  bool operator==(const Arc& o) const {
    return head == o.head && dependent == o.dependent && label == o.label;
  }
};

// Arcs are stored indexed by dependent: arcs[i].dependent == i.
struct DependencyTree {
  std::vector<Arc> arcs;
  bool low_confidence = false;

  std::size_t size() const { return arcs.size(); }
  std::int32_t head_of(std::size_t token) const { return arcs[token].head; }
  DepLabel label_of(std::size_t token) const { return arcs[token].label; }
  std::vector<std::int32_t> children_of(std::int32_t token) const;
  std::int32_t root() const;
};

// Returns an empty string when the tree is well formed, otherwise a
// description of the first problem found.
std::string CheckTree(const DependencyTree& tree);

struct Phrase {
  std::size_t head_token = 0;
  // Inclusive-exclusive token range.
  std::size_t first_token = 0;
  std::size_t last_token = 0;
  std::string text;
  PosTag pos = PosTag::kNoun;
  // Character span of text inside the prompt.
  std::size_t start = 0;
  std::size_t end = 0;
  // Determiner attached to the head, excluded from the span.
  std::optional<std::size_t> det_token;

  bool contains_token(std::size_t t) const {
    return t >= first_token && t < last_token;
  }
  bool operator==(const Phrase&) const = default;
};

struct CorefLink {
  Phrase anaphor;
  Phrase antecedent;

  bool operator==(const CorefLink&) const = default;
};

struct Sentence {
  std::size_t first_token = 0;
  std::size_t last_token = 0;  // exclusive
};

struct AnalysisState {
  std::string prompt_text;
  std::size_t cursor = 0;
  std::vector<Token> tokens;
  std::vector<PosTag> tags;
  std::vector<Sentence> sentences;
  DependencyTree tree;
  std::vector<Phrase> phrases;
  std::vector<CorefLink> coref;
  std::uint64_t revision = 0;
  // Index into phrases.
  std::optional<std::size_t> current_phrase;

  const Phrase* current() const {
    return current_phrase ? &phrases[*current_phrase] : nullptr;
  }
  // Phrase whose span contains the token, if any.
  const Phrase* phrase_of_token(std::size_t token) const;
  // Coreference link whose anaphor has the given head token.
  const CorefLink* coref_for(std::size_t head_token) const;
  // True when the head of the current phrase is still being typed.
  bool current_is_partial() const;
};

}  // namespace langsketch::nlp

#endif  // LANGSKETCH_NLP_TYPES_H_

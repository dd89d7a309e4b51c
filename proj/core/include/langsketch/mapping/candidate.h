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

#ifndef LANGSKETCH_MAPPING_CANDIDATE_H_
#define LANGSKETCH_MAPPING_CANDIDATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "langsketch/nlp/types.h"
#include "langsketch/sketch/identifiers.h"
#include "langsketch/sketch/node.h"

namespace langsketch::mapping {

// What a phrase turns into in the sketch. Rule files use the lowercase
// names.
enum class ElementKind : std::uint8_t {
  kClass,
  kFunction,
  kVariable,
  kValue,
  kCall,
  kStatement,
  kExpression,
  kParameter,
  kReference,
};

std::string_view ElementKindName(ElementKind kind);
std::optional<ElementKind> ParseElementKind(std::string_view name);

// Declared in ranking priority order.
enum class CandidateSource : std::uint8_t {
  kExisting,
  kSnippet,
  kInferred,
  kCoref,
};

std::string_view CandidateSourceName(CandidateSource source);
std::optional<CandidateSource> ParseCandidateSource(std::string_view name);

struct SnippetRef {
  std::string name;
  bool operator==(const SnippetRef&) const = default;
};

struct IdentifierRef {
  std::string name;
  sketch::IdentifierKind kind = sketch::IdentifierKind::kVariable;
  bool operator==(const IdentifierRef&) const = default;
};

struct InferredSpec {
  ElementKind kind = ElementKind::kVariable;
  std::string identifier;
  // Phrase text, used for hole labels.
  std::string label;
  bool operator==(const InferredSpec&) const = default;
};

// Points at the acceptance event whose element the phrase refers to.
struct ReferentRef {
  std::uint64_t event_seq = 0;
  bool operator==(const ReferentRef&) const = default;
};

using Payload = std::variant<SnippetRef, IdentifierRef, InferredSpec,
                             ReferentRef>;

struct Candidate {
  CandidateSource source = CandidateSource::kInferred;
  Payload payload;
  ElementKind kind = ElementKind::kVariable;
  std::string display;
  double score = 0.0;

  // "snippet:<name>", "existing:<kind>:<name>", "inferred:<kind>:<ident>"
  // or "coref:<seq>".
  std::string key() const;
  bool operator==(const Candidate&) const = default;
};

// Score descending, then source priority, then display, then key.
bool RanksBefore(const Candidate& a, const Candidate& b);
void SortCandidates(std::vector<Candidate>& candidates);

// The link between an accepted phrase and the node it produced.
struct Association {
  std::uint64_t seq = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
  // Prompt offset of the phrase head token.
  std::size_t head_start = 0;
  ElementKind kind = ElementKind::kVariable;
  // The element itself (a Call, a FunctionDef, ...).
  sketch::NodeId node = 0;
  // The subtree that was attached for it (an ExprStmt around a Call, ...).
  sketch::NodeId root = 0;
  std::string rule_id;
  std::optional<std::uint64_t> anchor_seq;

  bool operator==(const Association&) const = default;
};

// Token index of the association's head in the analysis, if it still lines
// up with a token.
std::optional<std::size_t> HeadToken(const Association& association,
                                     const nlp::AnalysisState& analysis);

}  // namespace langsketch::mapping

#endif  // LANGSKETCH_MAPPING_CANDIDATE_H_

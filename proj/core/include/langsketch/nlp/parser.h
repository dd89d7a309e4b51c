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

#ifndef LANGSKETCH_NLP_PARSER_H_
#define LANGSKETCH_NLP_PARSER_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langsketch/nlp/types.h"

namespace langsketch::nlp {

// Contract for a dependency parser backend. Implementations must be
// deterministic and return a tree with exactly one root whose arcs cover
// every token of the input.
class ParserBackend {
 public:
  virtual ~ParserBackend() = default;

  // Parses a single sentence. Head indices are relative to the span.
  virtual DependencyTree ParseSentence(std::span<const Token> tokens,
                                       std::span<const PosTag> tags) const = 0;
};

// Rule-driven attachment parser for imperative coding prompts: main verb as
// root, subject/object/dative attachment, preposition chains, relative and
// infinitival clauses, coordination. Anything it cannot place is attached
// to a preceding token with label `other` and flagged low-confidence.
class RuleBasedParser final : public ParserBackend {
 public:
  DependencyTree ParseSentence(std::span<const Token> tokens,
                               std::span<const PosTag> tags) const override;
};

const ParserBackend& DefaultParser();

// Parses each sentence independently and joins the roots of later sentences
// to the first sentence's root with label `other`.
DependencyTree ParseDependencies(std::span<const Token> tokens,
                                 std::span<const PosTag> tags,
                                 const ParserBackend& backend = DefaultParser());

// Gold-parse fixture records: `# text: ...` header followed by
// `dependent<TAB>head<TAB>label` lines, records separated by blank lines.
struct GoldRecord {
  std::string text;
  std::vector<Arc> arcs;
};

std::vector<GoldRecord> ParseGoldFixture(std::string_view content);
std::string FormatArcs(const DependencyTree& tree);

}  // namespace langsketch::nlp

#endif  // LANGSKETCH_NLP_PARSER_H_

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

#ifndef LANGSKETCH_ASSEMBLY_ASSEMBLER_H_
#define LANGSKETCH_ASSEMBLY_ASSEMBLER_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "langsketch/assembly/rules.h"
#include "langsketch/catalog/catalog.h"
#include "langsketch/mapping/candidate.h"
#include "langsketch/sketch/sketch.h"

namespace langsketch::assembly {

// Rule id of the proposal a coreference candidate produces.
inline constexpr std::string_view kRebindRule = "rebind";

struct Edit {
  enum class Type : std::uint8_t { kNone, kInsert, kSetProp };
  Type type = Type::kNone;
  // kInsert
  sketch::NodeId parent = 0;
  std::string slot;
  std::size_t position = 0;
  sketch::Fragment fragment;
  // Slot/index steps from the fragment root to the element node.
  std::vector<std::pair<std::string, std::size_t>> focus_path;
  // kSetProp
  sketch::NodeId node = 0;
  std::string prop;
  std::string value;

  bool operator==(const Edit&) const = default;
};

// Node ids an applied edit produced.
struct Applied {
  sketch::NodeId root = 0;
  sketch::NodeId node = 0;
};

struct RuleMatch {
  const AssemblyRule* rule = nullptr;
  // Null for fallback rules.
  const mapping::Association* anchor = nullptr;
};

struct Proposal {
  std::string rule_id;
  std::optional<std::uint64_t> anchor_seq;
  mapping::Candidate candidate;
  Edit edit;
  // Full render of the sketch with the edit applied.
  std::string preview;
};

struct AssemblyContext {
  const nlp::AnalysisState* analysis = nullptr;
  std::span<const mapping::Association> associations;
  const sketch::Sketch* sketch = nullptr;
  const catalog::SnippetCatalog* catalog = nullptr;
  const RuleSet* rules = nullptr;
};

// Anchored matches, scanning associated phrases before the candidate
// phrase from nearest to farthest and trying rules in priority order for
// each, followed by every fallback (empty path) rule.
std::vector<RuleMatch> MatchRules(const mapping::Candidate& candidate,
                                  const nlp::Phrase& phrase,
                                  const AssemblyContext& context);

// True when the dependency path leads from `from` to `to`.
bool PathMatches(const nlp::AnalysisState& analysis,
                 const std::vector<PathStep>& path, std::size_t from,
                 std::size_t to);

// The sketch edit a rule performs for the candidate. Needs no analysis, so
// replay can call it with the logged rule and anchor.
std::variant<Edit, sketch::Violation> BuildEdit(
    const AssemblyRule& rule, const mapping::Association* anchor,
    const mapping::Candidate& candidate, const sketch::Sketch& sketch,
    const catalog::SnippetCatalog& catalog);

// Applies an edit. On a violation the sketch is unchanged.
std::optional<sketch::Violation> ApplyEdit(sketch::Sketch& sketch,
                                           const Edit& edit, Applied* applied);

// A validated proposal, or the violation that rejected it.
std::variant<Proposal, sketch::Violation> Apply(
    const RuleMatch& match, const mapping::Candidate& candidate,
    const AssemblyContext& context);

// Valid proposals in MatchRules order. Fallback rules are only used when no
// anchored match yields a valid proposal. Coreference candidates produce a
// single rebind proposal with no edit.
std::vector<Proposal> Propose(const mapping::Candidate& candidate,
                              const nlp::Phrase& phrase,
                              const AssemblyContext& context);

}  // namespace langsketch::assembly

#endif  // LANGSKETCH_ASSEMBLY_ASSEMBLER_H_

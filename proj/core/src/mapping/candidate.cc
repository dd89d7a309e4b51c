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

#include "langsketch/mapping/candidate.h"

#include <algorithm>
#include <array>

namespace langsketch::mapping {
namespace {

constexpr std::array<std::string_view, 9> kKindNames = {
    "class", "function",   "variable",  "value",    "call",
    "statement", "expression", "parameter", "reference"};

constexpr std::array<std::string_view, 4> kSourceNames = {
    "existing", "snippet", "inferred", "coref"};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string_view ElementKindName(ElementKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<ElementKind> ParseElementKind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<ElementKind>(i);
  }
  return std::nullopt;
}

std::string_view CandidateSourceName(CandidateSource source) {
  return kSourceNames[static_cast<std::size_t>(source)];
}

std::optional<CandidateSource> ParseCandidateSource(std::string_view name) {
  for (std::size_t i = 0; i < kSourceNames.size(); ++i) {
    if (kSourceNames[i] == name) return static_cast<CandidateSource>(i);
  }
  return std::nullopt;
}

std::string Candidate::key() const {
  return std::visit(
      Overloaded{
          [](const SnippetRef& s) { return "snippet:" + s.name; },
          [](const IdentifierRef& r) {
            return "existing:" + std::string(IdentifierKindName(r.kind)) +
                   ":" + r.name;
          },
          [](const InferredSpec& s) {
            return "inferred:" + std::string(ElementKindName(s.kind)) + ":" +
                   s.identifier;
          },
          [](const ReferentRef& r) {
            return "coref:" + std::to_string(r.event_seq);
          }},
      payload);
}

bool RanksBefore(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.source != b.source) return a.source < b.source;
  if (a.display != b.display) return a.display < b.display;
  return a.key() < b.key();
}

void SortCandidates(std::vector<Candidate>& candidates) {
  std::sort(candidates.begin(), candidates.end(), RanksBefore);
}

std::optional<std::size_t> HeadToken(const Association& association,
                                     const nlp::AnalysisState& analysis) {
  for (const nlp::Token& t : analysis.tokens) {
    if (t.start == association.head_start) {
      if (t.end > association.end) return std::nullopt;
      return t.index;
    }
    if (t.start > association.head_start) break;
  }
  return std::nullopt;
}

}  // namespace langsketch::mapping

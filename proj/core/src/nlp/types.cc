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

#include "langsketch/nlp/types.h"

#include <array>
#include <utility>

namespace langsketch::nlp {
namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 11> kPosNames = {{
    {PosTag::kNoun, "NOUN"},
    {PosTag::kPropn, "PROPN"},
    {PosTag::kVerb, "VERB"},
    {PosTag::kAdj, "ADJ"},
    {PosTag::kAdp, "ADP"},
    {PosTag::kDet, "DET"},
    {PosTag::kPron, "PRON"},
    {PosTag::kConj, "CONJ"},
    {PosTag::kNum, "NUM"},
    {PosTag::kPunct, "PUNCT"},
    {PosTag::kOther, "OTHER"},
}};

constexpr std::array<std::pair<DepLabel, std::string_view>, 14> kDepNames = {{
    {DepLabel::kRoot, "root"},
    {DepLabel::kNsubj, "nsubj"},
    {DepLabel::kDobj, "dobj"},
    {DepLabel::kPobj, "pobj"},
    {DepLabel::kPrep, "prep"},
    {DepLabel::kDet, "det"},
    {DepLabel::kAmod, "amod"},
    {DepLabel::kCompound, "compound"},
    {DepLabel::kConj, "conj"},
    {DepLabel::kCc, "cc"},
    {DepLabel::kAttr, "attr"},
    {DepLabel::kDative, "dative"},
    {DepLabel::kRelcl, "relcl"},
    {DepLabel::kOther, "other"},
}};

}  // namespace

std::string_view PosTagName(PosTag tag) {
  for (const auto& [t, name] : kPosNames) {
    if (t == tag) return name;
  }
  return "OTHER";
}

std::optional<PosTag> ParsePosTag(std::string_view name) {
  for (const auto& [t, n] : kPosNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string_view DepLabelName(DepLabel label) {
  for (const auto& [l, name] : kDepNames) {
    if (l == label) return name;
  }
  return "other";
}

std::optional<DepLabel> ParseDepLabel(std::string_view name) {
  for (const auto& [l, n] : kDepNames) {
    if (n == name) return l;
  }
  return std::nullopt;
}

std::vector<std::int32_t> DependencyTree::children_of(
    std::int32_t token) const {
  std::vector<std::int32_t> out;
  for (const Arc& arc : arcs) {
    if (arc.head == token) out.push_back(arc.dependent);
  }
  return out;
}

std::int32_t DependencyTree::root() const {
  for (const Arc& arc : arcs) {
    if (arc.head == kRootHead) return arc.dependent;
  }
  return kRootHead;
}

std::string CheckTree(const DependencyTree& tree) {
  const auto n = static_cast<std::int32_t>(tree.arcs.size());
  if (n == 0) return "";
  int roots = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    const Arc& arc = tree.arcs[i];
    if (arc.dependent != i) {
      return "arc " + std::to_string(i) + " has dependent " +
             std::to_string(arc.dependent);
    }
    if (arc.head == kRootHead) {
      ++roots;
      if (arc.label != DepLabel::kRoot) {
        return "root arc of token " + std::to_string(i) + " not labeled root";
      }
    } else if (arc.head < 0 || arc.head >= n || arc.head == i) {
      return "token " + std::to_string(i) + " has invalid head " +
             std::to_string(arc.head);
    } else if (arc.label == DepLabel::kRoot) {
      return "non-root arc of token " + std::to_string(i) + " labeled root";
    }
  }
  if (roots != 1) return "expected one root, found " + std::to_string(roots);
  // Walk up from every token; a path longer than n means a cycle.
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t cur = i;
    for (std::int32_t steps = 0; cur != kRootHead; ++steps) {
      if (steps > n) return "cycle through token " + std::to_string(i);
      cur = tree.arcs[cur].head;
    }
  }
  return "";
}

const Phrase* AnalysisState::phrase_of_token(std::size_t token) const {
  for (const Phrase& p : phrases) {
    if (p.contains_token(token)) return &p;
  }
  return nullptr;
}

const CorefLink* AnalysisState::coref_for(std::size_t head_token) const {
  for (const CorefLink& link : coref) {
    if (link.anaphor.head_token == head_token) return &link;
  }
  return nullptr;
}

bool AnalysisState::current_is_partial() const {
  const Phrase* p = current();
  return p != nullptr && cursor == tokens[p->head_token].end;
}

}  // namespace langsketch::nlp

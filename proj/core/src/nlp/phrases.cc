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

#include "langsketch/nlp/phrases.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace langsketch::nlp {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool IsPhraseHeadTag(PosTag t) {
  return t == PosTag::kNoun || t == PosTag::kPropn || t == PosTag::kVerb ||
         t == PosTag::kPron;
}

// Lowercased words of the phrase minus its head.
std::vector<std::string> Modifiers(std::span<const Token> tokens,
                                   const Phrase& p) {
  std::vector<std::string> out;
  for (std::size_t t = p.first_token; t < p.last_token; ++t) {
    if (t != p.head_token) out.push_back(Lower(tokens[t].text));
  }
  return out;
}

}  // namespace

std::vector<Phrase> ChunkPhrases(std::string_view prompt_text,
                                 std::span<const Token> tokens,
                                 std::span<const PosTag> tags,
                                 const DependencyTree& tree) {
  const std::size_t n = tokens.size();
  std::vector<Phrase> out;
  std::vector<bool> absorbed(n, false);
  // Heads are visited right to left so a modifier is claimed by its own head
  // before it could be taken for a phrase of its own.
  std::vector<Phrase> reversed;
  for (std::size_t h = n; h-- > 0;) {
    if (absorbed[h] || !IsPhraseHeadTag(tags[h])) continue;
    Phrase p;
    p.head_token = h;
    p.pos = tags[h];
    std::size_t first = h;
    while (first > 0) {
      const Arc& arc = tree.arcs[first - 1];
      if (arc.head != static_cast<std::int32_t>(h) ||
          (arc.label != DepLabel::kAmod && arc.label != DepLabel::kCompound)) {
        break;
      }
      --first;
    }
    p.first_token = first;
    p.last_token = h + 1;
    for (std::size_t t = first; t <= h; ++t) absorbed[t] = true;
    for (std::size_t t = 0; t < first; ++t) {
      const Arc& arc = tree.arcs[t];
      if (arc.head == static_cast<std::int32_t>(h) &&
          arc.label == DepLabel::kDet) {
        p.det_token = t;
      }
    }
    p.start = tokens[first].start;
    p.end = tokens[h].end;
    p.text = std::string(prompt_text.substr(p.start, p.end - p.start));
    reversed.push_back(std::move(p));
  }
  out.assign(reversed.rbegin(), reversed.rend());
  return out;
}

std::optional<std::string_view> KindKeywordGroup(std::string_view word) {
  std::string w = Lower(word);
  if (w == "function" || w == "method") return "function";
  if (w == "argument" || w == "parameter") return "parameter";
  if (w == "class") return "class";
  if (w == "variable") return "variable";
  if (w == "list") return "list";
  return std::nullopt;
}

std::vector<CorefLink> ResolveCoreference(std::span<const Token> tokens,
                                          std::span<const Phrase> phrases,
                                          std::span<const PosTag> tags) {
  (void)tags;
  std::vector<CorefLink> out;
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    const Phrase& anaphor = phrases[i];
    const std::string head = Lower(tokens[anaphor.head_token].text);
    if (anaphor.pos == PosTag::kPron) {
      if (head != "it" && head != "this") continue;
      for (std::size_t j = i; j-- > 0;) {
        const Phrase& cand = phrases[j];
        if (cand.pos == PosTag::kVerb || cand.pos == PosTag::kPron) continue;
        out.push_back({anaphor, cand});
        break;
      }
      continue;
    }
    if (!anaphor.det_token) continue;
    const std::string det = Lower(tokens[*anaphor.det_token].text);
    if (det != "the" && det != "this" && det != "that") continue;
    auto group = KindKeywordGroup(head);
    if (!group) continue;
    const std::vector<std::string> mods = Modifiers(tokens, anaphor);
    for (std::size_t j = i; j-- > 0;) {
      const Phrase& cand = phrases[j];
      if (KindKeywordGroup(tokens[cand.head_token].text) != group) continue;
      if (!mods.empty() && Modifiers(tokens, cand) != mods) continue;
      out.push_back({anaphor, cand});
      break;
    }
  }
  return out;
}

}  // namespace langsketch::nlp

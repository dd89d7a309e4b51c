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

#include "langsketch/nlp/tagger.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "internal/embedded_data.h"
#include "langsketch/nlp/tokenizer.h"

namespace langsketch::nlp {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool IsLower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

const std::unordered_map<std::string_view, PosTag>& ClosedClass() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string_view, PosTag>();
    for (std::string_view w :
         {"a", "an", "the", "this", "that", "these", "those", "each", "every",
          "some", "any", "no", "another", "its", "my", "your", "our", "their",
          "his", "her"}) {
      t->emplace(w, PosTag::kDet);
    }
    for (std::string_view w :
         {"with", "to", "from", "into", "onto", "in", "on", "of", "for", "by",
          "at", "as", "about", "over", "under", "between", "through", "via",
          "without", "within", "after", "before", "across", "per", "than",
          "containing", "including", "having", "using", "inside", "like"}) {
      t->emplace(w, PosTag::kAdp);
    }
    for (std::string_view w : {"it", "they", "them", "he", "she", "we", "you",
                               "i", "me", "us", "which", "who", "what",
                               "itself", "themselves"}) {
      t->emplace(w, PosTag::kPron);
    }
    for (std::string_view w : {"and", "or", "but", "nor", "then", "if",
                               "when", "while", "unless", "so"}) {
      t->emplace(w, PosTag::kConj);
    }
    for (std::string_view w :
         {"should", "must", "can", "could", "will", "would", "may", "might",
          "shall", "do", "does", "did", "is", "are", "was", "were", "be",
          "been", "being", "has", "have", "had", "not", "also", "only", "just",
          "all", "both", "please"}) {
      t->emplace(w, PosTag::kOther);
    }
    for (std::string_view w : {"one", "two", "three", "four", "five", "six",
                               "seven", "eight", "nine", "ten", "zero"}) {
      t->emplace(w, PosTag::kNum);
    }
    return t;
  }();
  return *table;
}

bool IsNumber(std::string_view w) {
  if (w.empty()) return false;
  bool digit = false;
  for (char c : w) {
    if (IsDigit(c)) {
      digit = true;
    } else if (c != '.' && c != '_') {
      return false;
    }
  }
  return digit;
}

bool AllSymbols(std::string_view w) {
  return std::none_of(w.begin(), w.end(), IsAlnum);
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::optional<PosTag> SuffixTag(std::string_view lower, const Lexicon& lex) {
  auto stem_tag = [&](std::string stem) -> std::optional<PosTag> {
    if (stem.size() < 2) return std::nullopt;
    auto t = lex.Lookup(stem);
    if (t == PosTag::kVerb || t == PosTag::kNoun) return t;
    return std::nullopt;
  };
  if (EndsWith(lower, "ies") && lower.size() > 4) {
    std::string stem(lower.substr(0, lower.size() - 3));
    if (auto t = stem_tag(stem + "y")) return t;
  }
  if (EndsWith(lower, "es")) {
    if (auto t = stem_tag(std::string(lower.substr(0, lower.size() - 2)))) {
      return t;
    }
  }
  if (EndsWith(lower, "s") && !EndsWith(lower, "ss")) {
    if (auto t = stem_tag(std::string(lower.substr(0, lower.size() - 1)))) {
      return t;
    }
  }
  if (lower.size() > 4 && (EndsWith(lower, "ing") || EndsWith(lower, "ed"))) {
    return PosTag::kVerb;
  }
  return std::nullopt;
}

bool PrecededByBoundary(std::span<const Token> tokens,
                        std::span<const PosTag> tags, std::size_t i) {
  return i == 0 || IsSentenceBoundary(tokens[i - 1], tags[i - 1]);
}

}  // namespace

Lexicon Lexicon::Parse(std::string_view text) {
  Lexicon lex;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                  ": expected word<TAB>TAG");
    }
    auto tag = ParsePosTag(line.substr(tab + 1));
    if (!tag) {
      throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                  ": unknown tag '" +
                                  std::string(line.substr(tab + 1)) + "'");
    }
    lex.Add(std::string(line.substr(0, tab)), *tag);
    if (nl == text.size()) break;
  }
  return lex;
}

Lexicon Lexicon::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open lexicon file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

const Lexicon& Lexicon::Default() {
  static const Lexicon lex = Parse(internal::EmbeddedLexicon());
  return lex;
}

void Lexicon::Add(std::string word, PosTag tag) {
  std::string lower = Lower(word);
  auto [it, inserted] = entries_.insert_or_assign(std::move(word), tag);
  (void)it;
  if (inserted) {
    auto pos = std::lower_bound(sorted_lower_.begin(), sorted_lower_.end(),
                                lower);
    if (pos == sorted_lower_.end() || *pos != lower) {
      sorted_lower_.insert(pos, std::move(lower));
    }
  }
}

std::optional<PosTag> Lexicon::LookupExact(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<PosTag> Lexicon::Lookup(std::string_view word) const {
  if (auto t = LookupExact(word)) return t;
  return LookupExact(Lower(word));
}

std::vector<std::pair<std::string, PosTag>> Lexicon::Complete(
    std::string_view prefix, std::size_t limit) const {
  std::string lower = Lower(prefix);
  std::vector<std::pair<std::string, PosTag>> out;
  for (auto it = std::lower_bound(sorted_lower_.begin(), sorted_lower_.end(),
                                  lower);
       it != sorted_lower_.end() && it->starts_with(lower); ++it) {
    if (*it == lower) continue;
    auto tag = LookupExact(*it);
    if (!tag) continue;  // only an upper-case spelling exists
    out.emplace_back(*it, *tag);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::optional<PosTag> ClosedClassTag(std::string_view lower_word) {
  const auto& table = ClosedClass();
  auto it = table.find(lower_word);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool IsModal(std::string_view w) {
  static const std::unordered_set<std::string_view> kModals = {
      "should", "must", "can", "could", "will", "would", "may", "might",
      "shall", "do", "does", "did"};
  return kModals.contains(w);
}

bool IsCopula(std::string_view w) {
  static const std::unordered_set<std::string_view> kCopulas = {
      "is", "are", "was", "were", "be", "been", "being"};
  return kCopulas.contains(w);
}

bool IsAuxiliary(std::string_view w) {
  return IsModal(w) || IsCopula(w) || w == "has" || w == "have" ||
         w == "had" || w == "not";
}

bool LooksLikeIdentifier(std::string_view w) {
  if (w.size() < 2) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    if (c == '_' || c == '.') return true;
    if (i > 0 && IsDigit(c)) return true;
    if (i > 0 && IsUpper(c) && IsLower(w[i - 1])) return true;
  }
  return false;
}

bool IsContentTag(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kPropn ||
         tag == PosTag::kVerb || tag == PosTag::kAdj || tag == PosTag::kNum;
}

bool IsSentenceBoundary(const Token& token, PosTag tag) {
  return tag == PosTag::kPunct &&
         (token.text == "." || token.text == "!" || token.text == "?" ||
          token.text == ";");
}

std::vector<PosTag> TagPos(std::span<const Token> tokens,
                           const Lexicon& lexicon) {
  const std::size_t n = tokens.size();
  std::vector<PosTag> tags(n, PosTag::kNoun);
  std::vector<std::string> lower(n);
  std::vector<bool> closed(n, false);

  // Pass 1: context-free tags.
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& w = tokens[i].text;
    lower[i] = Lower(w);
    if (w.size() == 1 && IsEdgePunctuation(w[0])) {
      tags[i] = PosTag::kPunct;
      closed[i] = true;
      continue;
    }
    if (auto t = ClosedClassTag(lower[i])) {
      tags[i] = *t;
      closed[i] = true;
      continue;
    }
    if (IsNumber(w)) {
      tags[i] = PosTag::kNum;
      continue;
    }
    if (AllSymbols(w)) {
      tags[i] = PosTag::kOther;
      closed[i] = true;
      continue;
    }
    if (auto t = lexicon.LookupExact(w)) {
      tags[i] = *t;
      continue;
    }
    if (auto t = lexicon.LookupExact(lower[i])) {
      tags[i] = *t;
      continue;
    }
    if (LooksLikeIdentifier(w)) {
      tags[i] = PosTag::kPropn;
      continue;
    }
    if (IsUpper(w[0]) && !PrecededByBoundary(tokens, tags, i)) {
      tags[i] = PosTag::kPropn;
      continue;
    }
    if (auto t = SuffixTag(lower[i], lexicon)) {
      tags[i] = *t;
      continue;
    }
    tags[i] = PosTag::kNoun;
  }

  // Pass 2: context rules, left to right, never crossing a sentence
  // boundary forward.
  auto next_in_sentence = [&](std::size_t i) -> std::optional<std::size_t> {
    if (i + 1 >= n || IsSentenceBoundary(tokens[i], tags[i])) {
      return std::nullopt;
    }
    return i + 1;
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto next = next_in_sentence(i);
    const std::string& w = lower[i];
    if (w == "that" || w == "which" || w == "who" || w == "this") {
      bool next_verbal = next && (tags[*next] == PosTag::kVerb ||
                                  IsAuxiliary(lower[*next]));
      bool next_nominal =
          next && (tags[*next] == PosTag::kNoun ||
                   tags[*next] == PosTag::kPropn ||
                   tags[*next] == PosTag::kAdj || tags[*next] == PosTag::kNum);
      if (w == "who") {
        tags[i] = PosTag::kPron;
      } else if (w == "this") {
        tags[i] = next_nominal ? PosTag::kDet : PosTag::kPron;
      } else if (next_verbal) {
        tags[i] = PosTag::kPron;
      } else {
        tags[i] = next_nominal ? PosTag::kDet : PosTag::kPron;
      }
    }
    if (closed[i]) continue;
    bool prev_ok = i > 0 && !IsSentenceBoundary(tokens[i - 1], tags[i - 1]);
    if (prev_ok && IsModal(lower[i - 1]) &&
        (tags[i] == PosTag::kNoun || tags[i] == PosTag::kAdj)) {
      tags[i] = PosTag::kVerb;
      continue;
    }
    if (tags[i] == PosTag::kVerb && prev_ok) {
      // Verbs inside a determiner-led noun group act as nominal modifiers:
      // "a forward method", "the sort function".
      std::size_t j = i;
      while (j > 0 && (tags[j - 1] == PosTag::kAdj || tags[j - 1] == PosTag::kNum) &&
             !IsSentenceBoundary(tokens[j - 1], tags[j - 1])) {
        --j;
      }
      if (j > 0 && tags[j - 1] == PosTag::kDet &&
          !IsSentenceBoundary(tokens[j - 1], tags[j - 1])) {
        tags[i] = PosTag::kNoun;
        continue;
      }
    }
    if (PrecededByBoundary(tokens, tags, i) && tags[i] != PosTag::kVerb &&
        tags[i] != PosTag::kPropn && next &&
        (tags[*next] == PosTag::kDet || tags[*next] == PosTag::kPron)) {
      tags[i] = PosTag::kVerb;
    }
  }
  return tags;
}

std::vector<Sentence> SplitSentences(std::span<const Token> tokens,
                                     std::span<const PosTag> tags) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (IsSentenceBoundary(tokens[i], tags[i])) {
      out.push_back({start, i + 1});
      start = i + 1;
    }
  }
  if (start < tokens.size()) out.push_back({start, tokens.size()});
  return out;
}

}  // namespace langsketch::nlp

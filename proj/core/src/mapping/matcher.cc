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

#include "langsketch/mapping/matcher.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "langsketch/mapping/similarity.h"
#include "langsketch/nlp/phrases.h"

namespace langsketch::mapping {
namespace {

const std::set<std::string, std::less<>> kPythonKeywords = {
    "False",  "None",   "True",    "and",      "as",       "assert",
    "async",  "await",  "break",   "class",    "continue", "def",
    "del",    "elif",   "else",    "except",   "finally",  "for",
    "from",   "global", "if",      "import",   "in",       "is",
    "lambda", "nonlocal", "not",   "or",       "pass",     "raise",
    "return", "try",    "while",   "with",     "yield"};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::optional<ElementKind> KindForGroup(std::string_view group) {
  if (group == "function") return ElementKind::kFunction;
  if (group == "class") return ElementKind::kClass;
  if (group == "parameter") return ElementKind::kParameter;
  if (group == "variable" || group == "list") return ElementKind::kVariable;
  return std::nullopt;
}

ElementKind KindForIdentifier(sketch::IdentifierKind kind) {
  return kind == sketch::IdentifierKind::kFunction ? ElementKind::kCall
                                                   : ElementKind::kValue;
}

ElementKind KindForSnippet(catalog::SnippetKind kind) {
  switch (kind) {
    case catalog::SnippetKind::kClass:
      return ElementKind::kClass;
    case catalog::SnippetKind::kFunction:
      return ElementKind::kFunction;
    case catalog::SnippetKind::kVariable:
      return ElementKind::kVariable;
    case catalog::SnippetKind::kStatement:
      return ElementKind::kStatement;
    case catalog::SnippetKind::kExpression:
      return ElementKind::kExpression;
  }
  return ElementKind::kStatement;
}

double NormalizedSimilarity(std::string_view na, std::string_view nb) {
  return std::max({EditSimilarity(na, nb), InitialsScore(na, nb),
                   InitialsScore(nb, na)});
}

void Merge(std::map<std::string, Candidate>& by_key, Candidate c) {
  std::string key = c.key();
  auto it = by_key.find(key);
  if (it == by_key.end()) {
    by_key.emplace(std::move(key), std::move(c));
  } else if (RanksBefore(c, it->second)) {
    it->second = std::move(c);
  }
}

}  // namespace

std::string InferIdentifier(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (w.empty()) continue;
    if (!out.empty()) out += '_';
    for (char c : w) {
      out += std::isalnum(static_cast<unsigned char>(c))
                 ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                 : '_';
    }
  }
  if (out.empty()) return out;
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(0, "_");
  if (kPythonKeywords.contains(out)) out += '_';
  return out;
}

std::vector<Candidate> MatchIndependent(std::string_view phrase_text,
                                        const catalog::SnippetCatalog& catalog,
                                        const catalog::CodeIndex* index) {
  const std::string query = NormalizeForMatch(phrase_text);
  std::vector<Candidate> out;
  if (query.empty()) return out;
  const auto& normalized = catalog.normalized_aliases();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const catalog::Snippet& s = catalog.snippets()[i];
    double best = -1.0;
    std::size_t best_alias = 0;
    for (std::size_t a = 0; a < normalized[i].size(); ++a) {
      double score = NormalizedSimilarity(query, normalized[i][a]);
      if (score > best) {
        best = score;
        best_alias = a;
      }
    }
    if (best < kMatchThreshold) continue;
    out.push_back(Candidate{.source = CandidateSource::kSnippet,
                            .payload = SnippetRef{s.name},
                            .kind = KindForSnippet(s.kind),
                            .display = s.aliases[best_alias],
                            .score = best});
  }
  if (index != nullptr) {
    for (const sketch::Identifier& id : index->identifiers) {
      double score = NormalizedSimilarity(query, NormalizeForMatch(id.name));
      if (score < kMatchThreshold) continue;
      out.push_back(Candidate{.source = CandidateSource::kExisting,
                              .payload = IdentifierRef{id.name, id.kind},
                              .kind = KindForIdentifier(id.kind),
                              .display = id.name,
                              .score = score});
    }
  }
  SortCandidates(out);
  return out;
}

bool IsIndependent(std::span<const Candidate> independent) {
  return std::any_of(independent.begin(), independent.end(),
                     [](const Candidate& c) {
                       return (c.source == CandidateSource::kSnippet ||
                               c.source == CandidateSource::kExisting) &&
                              c.score >= kMatchThreshold;
                     });
}

std::vector<Candidate> InferDependent(const nlp::AnalysisState& analysis,
                                      const nlp::Phrase& phrase,
                                      std::span<const Association> associations,
                                      const nlp::Lexicon& lexicon) {
  std::vector<Candidate> out;
  const std::size_t head = phrase.head_token;
  const nlp::PosTag tag = analysis.tags[head];
  const std::string& prompt = analysis.prompt_text;

  if (const nlp::CorefLink* link = analysis.coref_for(head)) {
    const nlp::Phrase& ante = link->antecedent;
    const std::size_t ante_start = analysis.tokens[ante.head_token].start;
    // The most recent association of the antecedent wins.
    for (auto it = associations.rbegin(); it != associations.rend(); ++it) {
      if (it->head_start == ante_start && it->text == ante.text) {
        out.push_back(Candidate{.source = CandidateSource::kCoref,
                                .payload = ReferentRef{it->seq},
                                .kind = ElementKind::kReference,
                                .display = phrase.text,
                                .score = kCorefScore});
        break;
      }
    }
  }
  if (tag == nlp::PosTag::kPron) return out;

  const nlp::Token& head_token = analysis.tokens[head];
  std::vector<std::string> modifiers;
  for (std::size_t t = phrase.first_token; t < phrase.last_token; ++t) {
    if (t != head) modifiers.push_back(analysis.tokens[t].text);
  }
  const std::string before =
      prompt.substr(phrase.start, head_token.start - phrase.start);
  const std::string after = prompt.substr(head_token.end,
                                          phrase.end - head_token.end);

  struct Variant {
    std::string word;
    double weight;
  };
  std::vector<Variant> variants = {{head_token.text, 1.0}};
  const bool partial = analysis.current_phrase &&
                       &analysis.phrases[*analysis.current_phrase] == &phrase &&
                       analysis.current_is_partial();
  if (partial) {
    const std::string typed = Lower(head_token.text);
    for (const auto& [word, word_tag] :
         lexicon.Complete(typed, kHeadCompletions)) {
      variants.push_back({word, EditSimilarity(typed, word)});
    }
  }

  for (const Variant& v : variants) {
    const std::string label = before + v.word + after;
    std::optional<std::string_view> group =
        nlp::KindKeywordGroup(Lower(v.word));
    std::optional<ElementKind> def_kind;
    if (group) def_kind = KindForGroup(*group);
    ElementKind kind;
    double base;
    std::vector<std::string> words;
    if (def_kind) {
      kind = *def_kind;
      base = kKindKeywordScore;
      words = modifiers;
      if (words.empty()) words = {"new", std::string(*group)};
    } else if (tag == nlp::PosTag::kVerb) {
      kind = ElementKind::kCall;
      base = kVerbCallScore;
      words = {v.word};
    } else if (tag == nlp::PosTag::kNoun || tag == nlp::PosTag::kPropn) {
      kind = ElementKind::kVariable;
      base = kNounVariableScore;
      words = modifiers;
      words.push_back(v.word);
    } else {
      continue;
    }
    std::string ident = InferIdentifier(words);
    if (ident.empty()) continue;
    out.push_back(Candidate{.source = CandidateSource::kInferred,
                            .payload = InferredSpec{kind, ident, label},
                            .kind = kind,
                            .display = label,
                            .score = base * v.weight});
  }
  return out;
}

std::vector<Candidate> Suggest(const nlp::AnalysisState& analysis,
                               const catalog::SnippetCatalog& catalog,
                               const catalog::CodeIndex* index,
                               std::span<const Association> associations,
                               const nlp::Lexicon& lexicon) {
  const nlp::Phrase* phrase = analysis.current();
  if (phrase == nullptr) return {};
  std::map<std::string, Candidate> by_key;
  for (Candidate& c : MatchIndependent(phrase->text, catalog, index)) {
    Merge(by_key, std::move(c));
  }
  for (Candidate& c : InferDependent(analysis, *phrase, associations, lexicon)) {
    Merge(by_key, std::move(c));
  }
  std::vector<Candidate> out;
  out.reserve(by_key.size());
  for (auto& [key, c] : by_key) out.push_back(std::move(c));
  SortCandidates(out);
  if (out.size() > kMaxSuggestions) out.resize(kMaxSuggestions);
  return out;
}

}  // namespace langsketch::mapping

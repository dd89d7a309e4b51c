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

#include "langsketch/nlp/analysis.h"

#include <algorithm>
#include <cctype>

#include "langsketch/nlp/phrases.h"
#include "langsketch/nlp/tokenizer.h"

namespace langsketch::nlp {

AnalysisState Analyze(std::string_view prompt_text, std::size_t cursor,
                      const AnalyzerOptions& options) {
  const Lexicon& lexicon =
      options.lexicon != nullptr ? *options.lexicon : Lexicon::Default();
  const ParserBackend& parser =
      options.parser != nullptr ? *options.parser : DefaultParser();

  AnalysisState s;
  s.prompt_text = std::string(prompt_text);
  s.cursor = std::min(cursor, prompt_text.size());
  s.tokens = Tokenize(prompt_text);
  s.tags = TagPos(s.tokens, lexicon);
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    s.tokens[i].is_content = IsContentTag(s.tags[i]);
  }
  s.sentences = SplitSentences(s.tokens, s.tags);
  s.tree = ParseDependencies(s.tokens, s.tags, parser);
  s.phrases = ChunkPhrases(prompt_text, s.tokens, s.tags, s.tree);
  s.coref = ResolveCoreference(s.tokens, s.phrases, s.tags);

  for (std::size_t i = 0; i < s.phrases.size(); ++i) {
    const Phrase& p = s.phrases[i];
    if (p.start <= s.cursor && s.cursor <= p.end) {
      s.current_phrase = i;
      break;
    }
  }
  if (!s.current_phrase) {
    for (std::size_t i = s.phrases.size(); i-- > 0;) {
      const Phrase& p = s.phrases[i];
      if (p.end > s.cursor) continue;
      const std::string_view gap = prompt_text.substr(p.end, s.cursor - p.end);
      if (std::all_of(gap.begin(), gap.end(), [](char c) {
            return std::isspace(static_cast<unsigned char>(c)) != 0;
          })) {
        s.current_phrase = i;
      }
      break;
    }
  }
  return s;
}

bool SameAnalysis(const AnalysisState& a, const AnalysisState& b) {
  if (a.tree.arcs.size() != b.tree.arcs.size()) return false;
  for (std::size_t i = 0; i < a.tree.arcs.size(); ++i) {
    const Arc& x = a.tree.arcs[i];
    const Arc& y = b.tree.arcs[i];
    if (!(x == y) || x.fallback != y.fallback) return false;
  }
  auto same_sentences = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].first_token != y[i].first_token ||
          x[i].last_token != y[i].last_token) {
        return false;
      }
    }
    return true;
  };
  return a.prompt_text == b.prompt_text && a.cursor == b.cursor &&
         a.tokens == b.tokens && a.tags == b.tags &&
         same_sentences(a.sentences, b.sentences) &&
         a.tree.low_confidence == b.tree.low_confidence &&
         a.phrases == b.phrases && a.coref == b.coref &&
         a.current_phrase == b.current_phrase;
}

std::string FormatAnalysis(const AnalysisState& a, bool show_deps) {
  if (a.tokens.empty()) return "";
  std::string out = "# text: " + a.prompt_text + "\n# tokens:";
  for (std::size_t i = 0; i < a.tokens.size(); ++i) {
    out += ' ';
    out += a.tokens[i].text;
    out += '/';
    out += PosTagName(a.tags[i]);
  }
  out += '\n';
  for (const Phrase& p : a.phrases) {
    out += "# phrase: [" + std::to_string(p.first_token) + ", " +
           std::to_string(p.last_token) + ") head " +
           std::to_string(p.head_token) + " \"" + p.text + "\"\n";
  }
  for (const CorefLink& c : a.coref) {
    out += "# coref: \"" + c.anaphor.text + "\" -> \"" + c.antecedent.text +
           "\"\n";
  }
  if (show_deps) out += FormatArcs(a.tree);
  return out;
}

}  // namespace langsketch::nlp

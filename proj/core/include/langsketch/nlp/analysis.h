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

#ifndef LANGSKETCH_NLP_ANALYSIS_H_
#define LANGSKETCH_NLP_ANALYSIS_H_

#include <string>
#include <string_view>

#include "langsketch/nlp/parser.h"
#include "langsketch/nlp/tagger.h"
#include "langsketch/nlp/types.h"

namespace langsketch::nlp {

struct AnalyzerOptions {
  const Lexicon* lexicon = nullptr;
  const ParserBackend* parser = nullptr;
};

// Full pipeline for one keystroke: tokenize, tag, parse, chunk, resolve
// coreference and locate the phrase under the cursor. Pure; the revision
// counter is left at zero for the caller to stamp. A cursor past the end is
// clamped.
AnalysisState Analyze(std::string_view prompt_text, std::size_t cursor,
                      const AnalyzerOptions& options = {});

// Text dump in the gold-fixture layout: "# text:" header, "#"-prefixed
// token/tag, phrase and coreference lines, then the arcs when show_deps is
// set. Empty for a prompt without tokens.
std::string FormatAnalysis(const AnalysisState& analysis, bool show_deps);

// Structural equality ignoring the revision counter.
bool SameAnalysis(const AnalysisState& a, const AnalysisState& b);

}  // namespace langsketch::nlp

#endif  // LANGSKETCH_NLP_ANALYSIS_H_

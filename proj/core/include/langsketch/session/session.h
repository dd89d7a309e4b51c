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

#ifndef LANGSKETCH_SESSION_SESSION_H_
#define LANGSKETCH_SESSION_SESSION_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "langsketch/assembly/assembler.h"
#include "langsketch/assembly/rules.h"
#include "langsketch/catalog/catalog.h"
#include "langsketch/catalog/code_index.h"
#include "langsketch/nlp/tagger.h"
#include "langsketch/nlp/types.h"
#include "langsketch/session/events.h"

namespace langsketch::session {

struct Suggestion {
  std::string key;
  std::uint64_t revision = 0;
  mapping::Candidate candidate;
  assembly::Proposal proposal;
  // Accepting replaces prompt[replace_start, replace_end) with completion.
  std::string completion;
  std::size_t replace_start = 0;
  std::size_t replace_end = 0;
};

struct SessionDelta {
  std::string prompt_text;
  std::size_t cursor = 0;
  std::uint64_t revision = 0;
  std::string sketch_text;
  mapping::Association association;
};

// Hex FNV-1a of (revision, candidate key, rule id, anchor seq).
std::string SuggestionKey(std::uint64_t revision, std::string_view candidate_key,
                          std::string_view rule_id,
                          std::optional<std::uint64_t> anchor_seq);

struct SessionConfig {
  std::shared_ptr<const catalog::SnippetCatalog> catalog;
  std::shared_ptr<const assembly::RuleSet> rules;
  // Null means the built-in lexicon.
  const nlp::Lexicon* lexicon = nullptr;
};

// Process-unique id ("s1", "s2", ...).
std::string NewSessionId();

// Defaults: starter catalog and built-in rules.
SessionConfig DefaultSessionConfig();

// One prompt, one sketch. Not thread-safe; callers serialize access.
class Session {
 public:
  Session(std::string id, SessionConfig config, std::string_view code_buffer);

  const std::string& id() const { return id_; }
  const std::string& prompt() const { return prompt_; }
  std::size_t cursor() const { return cursor_; }
  std::uint64_t revision() const { return revision_; }
  const nlp::AnalysisState& analysis() const { return analysis_; }
  const sketch::Sketch& sketch() const { return sketch_; }
  const std::vector<mapping::Association>& associations() const {
    return associations_;
  }
  const std::vector<AcceptanceEvent>& events() const { return events_; }
  const std::vector<Suggestion>& suggestions() const { return suggestions_; }
  const catalog::CodeIndex& index() const { return *index_; }
  const SessionConfig& config() const { return config_; }
  std::string SketchText() const;

  // New revision: re-analysis, relocation of accepted phrases (replaying
  // when any is lost) and fresh suggestions. Earlier keys become stale.
  const std::vector<Suggestion>& UpdatePrompt(std::string text,
                                              std::size_t cursor);

  // Throws StaleSuggestion when the key is not pending.
  SessionDelta Accept(std::string_view key);
  // Index into suggestions(); throws std::out_of_range.
  SessionDelta AcceptIndex(std::size_t index);

  // Refreshes the identifier index only; the sketch is left alone.
  void UpdateCode(std::string_view code_buffer);

  // Share of content tokens covered by associated phrases.
  double AstRate() const;

 private:
  void Reanalyze();
  void Rebuild(std::vector<AcceptanceEvent> events);
  void ComputeSuggestions();

  std::string id_;
  SessionConfig config_;
  std::shared_ptr<const catalog::CodeIndex> index_;
  std::string prompt_;
  std::size_t cursor_ = 0;
  std::uint64_t revision_ = 0;
  std::uint64_t next_seq_ = 1;
  nlp::AnalysisState analysis_;
  sketch::Sketch sketch_;
  std::vector<mapping::Association> associations_;
  std::vector<AcceptanceEvent> events_;
  std::vector<Suggestion> suggestions_;
};

// Content-token coverage of an analysis by association spans.
double AstRate(const nlp::AnalysisState& analysis,
               std::span<const mapping::Association> associations);

}  // namespace langsketch::session

#endif  // LANGSKETCH_SESSION_SESSION_H_

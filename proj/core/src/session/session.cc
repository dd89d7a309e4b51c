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

#include "langsketch/session/session.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>

#include "langsketch/errors.h"
#include "langsketch/mapping/matcher.h"
#include "langsketch/nlp/analysis.h"
#include "langsketch/sketch/render.h"

namespace langsketch::session {
namespace {

void Fnv(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= 0x1f;
  h *= 1099511628211ULL;
}

bool Overlaps(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) {
  return a0 < b1 && b0 < a1;
}

}  // namespace

std::string SuggestionKey(std::uint64_t revision,
                          std::string_view candidate_key,
                          std::string_view rule_id,
                          std::optional<std::uint64_t> anchor_seq) {
  std::uint64_t h = 14695981039346656037ULL;
  Fnv(h, std::to_string(revision));
  Fnv(h, candidate_key);
  Fnv(h, rule_id);
  Fnv(h, anchor_seq ? std::to_string(*anchor_seq) : "-");
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string NewSessionId() {
  static std::atomic<std::uint64_t> next{1};
  return "s" + std::to_string(next.fetch_add(1));
}

SessionConfig DefaultSessionConfig() {
  SessionConfig config;
  config.catalog = std::shared_ptr<const catalog::SnippetCatalog>(
      &catalog::StarterCatalog(), [](const catalog::SnippetCatalog*) {});
  config.rules = std::shared_ptr<const assembly::RuleSet>(
      &assembly::DefaultRules(), [](const assembly::RuleSet*) {});
  return config;
}

double AstRate(const nlp::AnalysisState& analysis,
               std::span<const mapping::Association> associations) {
  std::size_t content = 0;
  std::size_t covered = 0;
  for (const nlp::Token& t : analysis.tokens) {
    if (!t.is_content) continue;
    ++content;
    for (const mapping::Association& a : associations) {
      if (t.start >= a.start && t.end <= a.end) {
        ++covered;
        break;
      }
    }
  }
  return content == 0 ? 0.0
                      : static_cast<double>(covered) /
                            static_cast<double>(content);
}

Session::Session(std::string id, SessionConfig config,
                 std::string_view code_buffer)
    : id_(std::move(id)), config_(std::move(config)) {
  SessionConfig defaults = DefaultSessionConfig();
  if (!config_.catalog) config_.catalog = defaults.catalog;
  if (!config_.rules) config_.rules = defaults.rules;
  if (config_.lexicon == nullptr) config_.lexicon = &nlp::Lexicon::Default();
  index_ = catalog::RefreshIndex(code_buffer);
  Reanalyze();
}

std::string Session::SketchText() const { return sketch::Render(sketch_); }

void Session::Reanalyze() {
  nlp::AnalyzerOptions options;
  options.lexicon = config_.lexicon;
  analysis_ = nlp::Analyze(prompt_, cursor_, options);
  analysis_.revision = revision_;
}

void Session::Rebuild(std::vector<AcceptanceEvent> events) {
  ReplayResult r = Replay(events, *config_.catalog, *config_.rules);
  if (!r.dropped.empty()) {
    std::erase_if(events, [&](const AcceptanceEvent& e) {
      return std::find(r.dropped.begin(), r.dropped.end(), e.seq) !=
             r.dropped.end();
    });
  }
  events_ = std::move(events);
  sketch_ = std::move(r.sketch);
  associations_ = std::move(r.associations);
}

const std::vector<Suggestion>& Session::UpdatePrompt(std::string text,
                                                     std::size_t cursor) {
  prompt_ = std::move(text);
  cursor_ = std::min(cursor, prompt_.size());
  ++revision_;
  Reanalyze();
  std::vector<AcceptanceEvent> relocated = Relocate(events_, prompt_);
  if (relocated != events_) Rebuild(std::move(relocated));
  ComputeSuggestions();
  return suggestions_;
}

void Session::ComputeSuggestions() {
  suggestions_.clear();
  const nlp::Phrase* phrase = analysis_.current();
  if (phrase == nullptr) return;
  // An accepted phrase is not offered again.
  for (const mapping::Association& a : associations_) {
    if (Overlaps(a.start, a.end, phrase->start, phrase->end)) return;
  }
  const std::vector<mapping::Candidate> candidates =
      mapping::Suggest(analysis_, *config_.catalog, index_.get(),
                       associations_, *config_.lexicon);
  assembly::AssemblyContext context{&analysis_, associations_, &sketch_,
                                    config_.catalog.get(),
                                    config_.rules.get()};
  for (const mapping::Candidate& c : candidates) {
    for (assembly::Proposal& p : assembly::Propose(c, *phrase, context)) {
      if (suggestions_.size() == mapping::kMaxSuggestions) return;
      Suggestion s;
      s.key = SuggestionKey(revision_, c.key(), p.rule_id, p.anchor_seq);
      s.revision = revision_;
      s.candidate = c;
      s.completion = c.display;
      s.replace_start = phrase->start;
      s.replace_end = phrase->end;
      s.proposal = std::move(p);
      suggestions_.push_back(std::move(s));
    }
  }
}

SessionDelta Session::Accept(std::string_view key) {
  auto it = std::find_if(suggestions_.begin(), suggestions_.end(),
                         [&](const Suggestion& s) { return s.key == key; });
  if (it == suggestions_.end()) throw StaleSuggestion(std::string(key));
  const Suggestion s = *it;

  const std::size_t removed = s.replace_end - s.replace_start;
  const std::size_t added = s.completion.size();
  std::string text = prompt_.substr(0, s.replace_start) + s.completion +
                     prompt_.substr(s.replace_end);
  std::size_t cursor = cursor_;
  if (cursor >= s.replace_end) {
    cursor = cursor - removed + added;
  } else if (cursor >= s.replace_start) {
    cursor = s.replace_start + added;
  }
  std::vector<AcceptanceEvent> events = events_;
  for (AcceptanceEvent& e : events) {
    if (e.start >= s.replace_end) {
      e.start = e.start - removed + added;
      e.end = e.end - removed + added;
      e.head_start = e.head_start - removed + added;
    }
  }
  prompt_ = std::move(text);
  cursor_ = cursor;
  ++revision_;
  Reanalyze();

  AcceptanceEvent event;
  event.seq = next_seq_++;
  event.phrase_text = s.completion;
  event.start = s.replace_start;
  event.end = s.replace_start + added;
  const std::size_t last_space = s.completion.rfind(' ');
  event.head_start =
      event.start + (last_space == std::string::npos ? 0 : last_space + 1);
  for (const nlp::Phrase& p : analysis_.phrases) {
    if (p.start == event.start && p.end == event.end) {
      event.head_start = analysis_.tokens[p.head_token].start;
      break;
    }
  }
  event.candidate = s.candidate;
  event.rule_id = s.proposal.rule_id;
  event.anchor_seq = s.proposal.anchor_seq;
  events.push_back(event);
  Rebuild(std::move(events));
  suggestions_.clear();

  SessionDelta delta;
  delta.prompt_text = prompt_;
  delta.cursor = cursor_;
  delta.revision = revision_;
  delta.sketch_text = SketchText();
  for (const mapping::Association& a : associations_) {
    if (a.seq == event.seq) delta.association = a;
  }
  return delta;
}

SessionDelta Session::AcceptIndex(std::size_t index) {
  if (index >= suggestions_.size()) {
    throw std::out_of_range("suggestion index " + std::to_string(index) +
                            " out of range (" +
                            std::to_string(suggestions_.size()) + " pending)");
  }
  const std::string key = suggestions_[index].key;
  return Accept(key);
}

void Session::UpdateCode(std::string_view code_buffer) {
  index_ = catalog::RefreshIndex(code_buffer);
}

double Session::AstRate() const {
  return session::AstRate(analysis_, associations_);
}

}  // namespace langsketch::session

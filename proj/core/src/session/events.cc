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

#include "langsketch/session/events.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "langsketch/assembly/assembler.h"

namespace langsketch::session {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& what) {
  throw std::invalid_argument("event: " + what);
}

const json& Field(const json& v, const char* name) {
  auto it = v.find(name);
  if (it == v.end()) Bad(std::string("missing ") + name);
  return *it;
}

std::string Str(const json& v, const char* name) {
  const json& f = Field(v, name);
  if (!f.is_string()) Bad(std::string(name) + " must be a string");
  return f.get<std::string>();
}

std::uint64_t Uint(const json& v, const char* name) {
  const json& f = Field(v, name);
  if (!f.is_number_unsigned()) Bad(std::string(name) + " must be unsigned");
  return f.get<std::uint64_t>();
}

sketch::IdentifierKind ParseIdentifierKind(const std::string& name) {
  for (auto k : {sketch::IdentifierKind::kVariable,
                 sketch::IdentifierKind::kFunction,
                 sketch::IdentifierKind::kClass}) {
    if (sketch::IdentifierKindName(k) == name) return k;
  }
  Bad("unknown identifier kind " + name);
}

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

json EventToJson(const AcceptanceEvent& e) {
  const mapping::Candidate& c = e.candidate;
  json cand = {{"key", c.key()},
               {"source", mapping::CandidateSourceName(c.source)},
               {"kind", mapping::ElementKindName(c.kind)},
               {"display", c.display},
               {"score", c.score}};
  if (const auto* s = std::get_if<mapping::SnippetRef>(&c.payload)) {
    cand["snippet"] = s->name;
  } else if (const auto* r = std::get_if<mapping::IdentifierRef>(&c.payload)) {
    cand["identifier"] = r->name;
    cand["identifier_kind"] = sketch::IdentifierKindName(r->kind);
  } else if (const auto* i = std::get_if<mapping::InferredSpec>(&c.payload)) {
    cand["identifier"] = i->identifier;
    cand["label"] = i->label;
  } else if (const auto* f = std::get_if<mapping::ReferentRef>(&c.payload)) {
    cand["referent"] = f->event_seq;
  }
  json out = {{"seq", e.seq},
              {"phrase",
               {{"text", e.phrase_text},
                {"start", e.start},
                {"end", e.end},
                {"head_start", e.head_start}}},
              {"candidate", cand},
              {"rule", e.rule_id},
              {"anchor_seq", e.anchor_seq ? json(*e.anchor_seq) : json()}};
  return out;
}

AcceptanceEvent EventFromJson(const json& v) {
  if (!v.is_object()) Bad("not an object");
  AcceptanceEvent e;
  e.seq = Uint(v, "seq");
  const json& phrase = Field(v, "phrase");
  e.phrase_text = Str(phrase, "text");
  e.start = Uint(phrase, "start");
  e.end = Uint(phrase, "end");
  e.head_start = Uint(phrase, "head_start");
  if (e.end < e.start || e.head_start < e.start || e.head_start > e.end) {
    Bad("inconsistent phrase span");
  }
  e.rule_id = Str(v, "rule");
  const json& anchor = Field(v, "anchor_seq");
  if (!anchor.is_null()) e.anchor_seq = Uint(v, "anchor_seq");
  const json& c = Field(v, "candidate");
  auto source = mapping::ParseCandidateSource(Str(c, "source"));
  auto kind = mapping::ParseElementKind(Str(c, "kind"));
  if (!source || !kind) Bad("unknown candidate source or kind");
  e.candidate.source = *source;
  e.candidate.kind = *kind;
  e.candidate.display = Str(c, "display");
  const json& score = Field(c, "score");
  if (!score.is_number()) Bad("score must be a number");
  e.candidate.score = score.get<double>();
  switch (*source) {
    case mapping::CandidateSource::kSnippet:
      e.candidate.payload = mapping::SnippetRef{Str(c, "snippet")};
      break;
    case mapping::CandidateSource::kExisting:
      e.candidate.payload = mapping::IdentifierRef{
          Str(c, "identifier"), ParseIdentifierKind(Str(c, "identifier_kind"))};
      break;
    case mapping::CandidateSource::kInferred:
      e.candidate.payload =
          mapping::InferredSpec{*kind, Str(c, "identifier"), Str(c, "label")};
      break;
    case mapping::CandidateSource::kCoref:
      e.candidate.payload = mapping::ReferentRef{Uint(c, "referent")};
      break;
  }
  return e;
}

ReplayResult Replay(std::span<const AcceptanceEvent> events,
                    const catalog::SnippetCatalog& catalog,
                    const assembly::RuleSet& rules) {
  ReplayResult out;
  std::map<std::uint64_t, std::size_t> live;  // seq -> association index
  for (const AcceptanceEvent& e : events) {
    const mapping::Association* anchor = nullptr;
    if (e.anchor_seq) {
      auto it = live.find(*e.anchor_seq);
      if (it == live.end()) {
        out.dropped.push_back(e.seq);
        continue;
      }
      anchor = &out.associations[it->second];
    }
    mapping::Association a;
    a.seq = e.seq;
    a.start = e.start;
    a.end = e.end;
    a.text = e.phrase_text;
    a.head_start = e.head_start;
    a.kind = e.candidate.kind;
    a.rule_id = e.rule_id;
    a.anchor_seq = e.anchor_seq;
    if (e.rule_id == assembly::kRebindRule) {
      if (anchor == nullptr) {
        out.dropped.push_back(e.seq);
        continue;
      }
      a.kind = anchor->kind;
      a.node = anchor->node;
      a.root = anchor->root;
    } else {
      const assembly::AssemblyRule* rule = rules.Find(e.rule_id);
      if (rule == nullptr) {
        out.dropped.push_back(e.seq);
        continue;
      }
      auto built =
          assembly::BuildEdit(*rule, anchor, e.candidate, out.sketch, catalog);
      assembly::Applied applied;
      if (std::holds_alternative<sketch::Violation>(built) ||
          assembly::ApplyEdit(out.sketch, std::get<assembly::Edit>(built),
                              &applied)) {
        out.dropped.push_back(e.seq);
        continue;
      }
      a.node = applied.node;
      a.root = applied.root;
    }
    live[e.seq] = out.associations.size();
    out.associations.push_back(std::move(a));
  }
  return out;
}

std::vector<AcceptanceEvent> Relocate(std::span<const AcceptanceEvent> events,
                                      std::string_view text) {
  std::vector<AcceptanceEvent> out;
  std::vector<std::pair<std::size_t, std::size_t>> claimed;
  for (const AcceptanceEvent& e : events) {
    if (e.phrase_text.empty()) continue;
    std::optional<std::size_t> best;
    std::size_t best_distance = 0;
    const auto free_span = [&](std::size_t pos, std::size_t end) {
      return std::none_of(claimed.begin(), claimed.end(), [&](const auto& span) {
        return pos < span.second && span.first < end;
      });
    };
    // Text appended right after the phrase keeps it in place.
    if (text.substr(std::min(e.start, text.size()), e.phrase_text.size()) ==
            e.phrase_text &&
        free_span(e.start, e.end)) {
      best = e.start;
    }
    for (std::size_t pos = best ? std::string::npos : text.find(e.phrase_text);
         pos != std::string::npos; pos = text.find(e.phrase_text, pos + 1)) {
      const std::size_t end = pos + e.phrase_text.size();
      if (pos > 0 && IsWordChar(text[pos - 1])) continue;
      if (end < text.size() && IsWordChar(text[end])) continue;
      if (!free_span(pos, end)) continue;
      const std::size_t distance = pos > e.start ? pos - e.start : e.start - pos;
      if (!best || distance < best_distance) {
        best = pos;
        best_distance = distance;
      }
    }
    if (!best) continue;
    AcceptanceEvent moved = e;
    moved.start = *best;
    moved.end = *best + e.phrase_text.size();
    moved.head_start = *best + (e.head_start - e.start);
    claimed.emplace_back(moved.start, moved.end);
    out.push_back(std::move(moved));
  }
  return out;
}

}  // namespace langsketch::session

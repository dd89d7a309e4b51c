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

#ifndef LANGSKETCH_SESSION_EVENTS_H_
#define LANGSKETCH_SESSION_EVENTS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "langsketch/assembly/rules.h"
#include "langsketch/catalog/catalog.h"
#include "langsketch/mapping/candidate.h"
#include "langsketch/sketch/sketch.h"

namespace langsketch::session {

struct AcceptanceEvent {
  std::uint64_t seq = 0;
  std::string phrase_text;
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t head_start = 0;
  mapping::Candidate candidate;
  std::string rule_id;
  std::optional<std::uint64_t> anchor_seq;

  bool operator==(const AcceptanceEvent&) const = default;
};

nlohmann::json EventToJson(const AcceptanceEvent& event);
// Throws std::invalid_argument on malformed input.
AcceptanceEvent EventFromJson(const nlohmann::json& value);

struct ReplayResult {
  sketch::Sketch sketch;
  // One per surviving event, in log order.
  std::vector<mapping::Association> associations;
  // Events whose anchor was dropped or whose edit no longer applies.
  std::vector<std::uint64_t> dropped;
};

// Rebuilds the sketch from a bare Module. Deterministic: identical logs
// give identical node ids and renders.
ReplayResult Replay(std::span<const AcceptanceEvent> events,
                    const catalog::SnippetCatalog& catalog,
                    const assembly::RuleSet& rules);

// Relocates each event's phrase in the new prompt text: the whole-word
// occurrence nearest to the old span that no earlier event claimed. Events
// without one are left out of the result.
std::vector<AcceptanceEvent> Relocate(std::span<const AcceptanceEvent> events,
                                      std::string_view prompt_text);

}  // namespace langsketch::session

#endif  // LANGSKETCH_SESSION_EVENTS_H_

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

#ifndef LANGSKETCH_SESSION_SCRIPT_H_
#define LANGSKETCH_SESSION_SCRIPT_H_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "langsketch/session/session.h"

namespace langsketch::session {

// One replay-script record: the full prompt text after a keystroke, or the
// acceptance of a suggestion by its index in the current list.
struct ScriptRecord {
  enum class Type : std::uint8_t { kTypeText, kAccept };
  Type type = Type::kTypeText;
  std::string text;
  std::size_t cursor = 0;
  std::size_t suggestion_index = 0;

  bool operator==(const ScriptRecord&) const = default;
};

// A JSON array of {"type": "type_text", "text", "cursor"} and
// {"type": "accept", "suggestion_index"}. A missing cursor means the end of
// the text. Throws ScriptError naming the 1-based record.
std::vector<ScriptRecord> ParseScript(const nlohmann::json& document);
std::vector<ScriptRecord> ParseScriptText(std::string_view text);
std::vector<ScriptRecord> LoadScriptFile(const std::string& path);
nlohmann::json ScriptToJson(const std::vector<ScriptRecord>& records);

struct ScriptRun {
  std::string prompt;
  std::string sketch_text;
  std::vector<AcceptanceEvent> events;
  double ast_rate = 0.0;
  // Suggestions delivered over all type_text records.
  std::size_t suggestion_count = 0;
  std::size_t acceptance_count = 0;
  // Engine-side time of each type_text record.
  std::vector<double> latencies_ms;
};

// Runs the records against a fresh session. Throws ScriptError when an
// accept index is out of range.
ScriptRun RunScript(const std::vector<ScriptRecord>& records,
                    const SessionConfig& config, std::string_view code_buffer);

}  // namespace langsketch::session

#endif  // LANGSKETCH_SESSION_SCRIPT_H_

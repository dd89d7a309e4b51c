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

#ifndef LANGSKETCH_LLM_DIFF_H_
#define LANGSKETCH_LLM_DIFF_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace langsketch::llm {

enum class EditKind : std::uint8_t { kKeep, kInsert, kDelete };

std::string_view EditKindName(EditKind kind);
std::optional<EditKind> ParseEditKind(std::string_view name);

// `line` includes its trailing "\n" when the source line had one, so
// applying a script is plain concatenation.
struct EditOp {
  EditKind kind = EditKind::kKeep;
  std::string line;

  bool operator==(const EditOp&) const = default;
};

using EditScript = std::vector<EditOp>;

// Lines with their terminators; the last one may lack "\n".
std::vector<std::string> SplitLines(std::string_view text);

// Minimal line diff (Myers). Within a changed run, deletions come before
// insertions.
EditScript DiffLines(std::string_view old_text, std::string_view new_text);

// Concatenation of the kept and inserted lines.
std::string ApplyEdits(const EditScript& script);
// Concatenation of the kept and deleted lines.
std::string OldText(const EditScript& script);

// [{"op": "keep"|"insert"|"delete", "line": "..."}]
nlohmann::json EditScriptToJson(const EditScript& script);
// Throws std::invalid_argument on malformed input.
EditScript EditScriptFromJson(const nlohmann::json& value);

}  // namespace langsketch::llm

#endif  // LANGSKETCH_LLM_DIFF_H_

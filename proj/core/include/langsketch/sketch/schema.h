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

#ifndef LANGSKETCH_SKETCH_SCHEMA_H_
#define LANGSKETCH_SKETCH_SCHEMA_H_

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "langsketch/sketch/node.h"

namespace langsketch::sketch {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kMaxCallArity = 8;

struct SlotRule {
  NodeKind parent;
  std::string_view slot;
  std::vector<NodeKind> allowed;
  std::size_t min;
  std::size_t max;

  bool Allows(NodeKind kind) const;
};

enum class PropType : std::uint8_t {
  kIdentifier,  // Python identifier, not a keyword
  kDottedName,  // identifiers joined by '.'
  kText,        // any string
  kNumber,      // Python int/float literal
  kLabel,       // hole label: no commas, newlines or edge whitespace
};

struct PropRule {
  NodeKind kind;
  std::string_view name;
  PropType type;
  bool required;
};

// Every (kind, slot) pair appears exactly once.
const std::vector<SlotRule>& SlotSchema();
const std::vector<PropRule>& PropSchema();

const SlotRule* FindSlotRule(NodeKind parent, std::string_view slot);
std::vector<const SlotRule*> SlotsOf(NodeKind kind);
std::vector<const PropRule*> PropsOf(NodeKind kind);
const PropRule* FindPropRule(NodeKind kind, std::string_view name);

bool IsStatementKind(NodeKind kind);
bool IsExpressionKind(NodeKind kind);

bool IsPythonKeyword(std::string_view word);
bool IsIdentifier(std::string_view text);
bool IsDottedName(std::string_view text);
bool IsNumberLiteral(std::string_view text);
bool IsValidLabel(std::string_view text);
// Why the value is invalid for the type, or empty when valid.
std::string CheckProp(PropType type, std::string_view value);

// Markdown rendering of both tables, used to generate SCHEMA.md.
std::string SchemaMarkdown();

}  // namespace langsketch::sketch

#endif  // LANGSKETCH_SKETCH_SCHEMA_H_

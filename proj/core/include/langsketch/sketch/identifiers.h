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

#ifndef LANGSKETCH_SKETCH_IDENTIFIERS_H_
#define LANGSKETCH_SKETCH_IDENTIFIERS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace langsketch::sketch {

enum class IdentifierKind : std::uint8_t { kVariable, kFunction, kClass };

std::string_view IdentifierKindName(IdentifierKind kind);

struct Identifier {
  std::string name;
  IdentifierKind kind;
  std::size_t line = 0;  // 1-based

  bool operator==(const Identifier&) const = default;
};

// Lexical scan of possibly broken code: `def X(` is a function, `class X` a
// class, and `X =` or `X:` at column 0 a variable. First occurrence wins.
std::vector<Identifier> ExtractIdentifiers(std::string_view code_text);

}  // namespace langsketch::sketch

#endif  // LANGSKETCH_SKETCH_IDENTIFIERS_H_

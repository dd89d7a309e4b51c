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

#ifndef LANGSKETCH_CATALOG_TEMPLATE_H_
#define LANGSKETCH_CATALOG_TEMPLATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langsketch/sketch/node.h"

namespace langsketch::catalog {

enum class SnippetKind : std::uint8_t {
  kClass,
  kFunction,
  kStatement,
  kExpression,
  kVariable,
};

std::string_view SnippetKindName(SnippetKind kind);
std::optional<SnippetKind> ParseSnippetKind(std::string_view name);

struct TemplateHole {
  int ordinal = 0;
  std::string label;

  bool operator==(const TemplateHole&) const = default;
};

struct ParsedTemplate {
  sketch::Fragment fragment;
  std::vector<TemplateHole> holes;  // sorted by ordinal
};

// Parses a template written in the supported Python subset (class, def,
// decorators, assignment, calls, return, import, pass). `${n:label}` markers
// become labeled holes; a lone "..." statement leaves a body empty. Methods
// drop a leading `self` parameter since rendering re-adds it. The root of
// the fragment must match the kind. Throws TemplateError naming `snippet`.
ParsedTemplate ParseTemplate(std::string_view text, SnippetKind kind,
                             const std::string& snippet = "<template>");

}  // namespace langsketch::catalog

#endif  // LANGSKETCH_CATALOG_TEMPLATE_H_

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

#include "langsketch/sketch/schema.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace langsketch::sketch {
namespace {

using K = NodeKind;

const std::vector<NodeKind> kExpr = {K::kCall, K::kName, K::kAttribute,
                                     K::kStringLit, K::kNumberLit, K::kHole};
const std::vector<NodeKind> kModuleStmt = {K::kClassDef, K::kFunctionDef,
                                           K::kAssign,   K::kExprStmt,
                                           K::kImport,   K::kPass,
                                           K::kHole};

std::vector<NodeKind> BodyStmt() {
  auto out = kModuleStmt;
  out.push_back(K::kReturn);
  return out;
}

bool IsAlpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}
bool IsDigit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::string_view PropTypeName(PropType t) {
  switch (t) {
    case PropType::kIdentifier: return "identifier";
    case PropType::kDottedName: return "dotted name";
    case PropType::kText: return "text";
    case PropType::kNumber: return "number";
    case PropType::kLabel: return "label";
  }
  return "text";
}

std::string Bounds(const SlotRule& r) {
  std::string max = r.max == kUnbounded ? "*" : std::to_string(r.max);
  return std::to_string(r.min) + ".." + max;
}

}  // namespace

bool SlotRule::Allows(NodeKind kind) const {
  return std::find(allowed.begin(), allowed.end(), kind) != allowed.end();
}

const std::vector<SlotRule>& SlotSchema() {
  static const std::vector<SlotRule> kSchema = {
      {K::kModule, "body", kModuleStmt, 0, kUnbounded},
      {K::kClassDef, "decorators", {K::kDecorator}, 0, 1},
      {K::kClassDef, "body", {K::kBody}, 1, 1},
      {K::kFunctionDef, "decorators", {K::kDecorator}, 0, 1},
      {K::kFunctionDef, "params", {K::kParams}, 1, 1},
      {K::kFunctionDef, "body", {K::kBody}, 1, 1},
      {K::kParams, "items", {K::kParam}, 0, kUnbounded},
      {K::kBody, "stmts", BodyStmt(), 0, kUnbounded},
      {K::kAssign, "target", {K::kName, K::kAttribute, K::kHole}, 1, 1},
      {K::kAssign, "value", kExpr, 1, 1},
      {K::kExprStmt,
       "value",
       {K::kCall, K::kName, K::kAttribute, K::kStringLit, K::kNumberLit},
       1,
       1},
      {K::kCall, "func", {K::kName, K::kAttribute, K::kHole}, 1, 1},
      {K::kCall, "args", {K::kArgList}, 1, 1},
      {K::kArgList, "items", {K::kArg}, 0, kMaxCallArity},
      {K::kArg, "value", kExpr, 1, 1},
      {K::kAttribute,
       "value",
       {K::kCall, K::kName, K::kAttribute, K::kStringLit},
       1,
       1},
      {K::kReturn, "value", kExpr, 0, 1},
      {K::kDecorator, "value", {K::kCall, K::kName, K::kAttribute}, 1, 1},
  };
  return kSchema;
}

const std::vector<PropRule>& PropSchema() {
  static const std::vector<PropRule> kProps = {
      {K::kClassDef, "name", PropType::kIdentifier, true},
      {K::kClassDef, "base", PropType::kDottedName, false},
      {K::kFunctionDef, "name", PropType::kIdentifier, true},
      {K::kParam, "name", PropType::kIdentifier, true},
      {K::kArg, "name", PropType::kIdentifier, false},
      {K::kName, "name", PropType::kIdentifier, true},
      {K::kAttribute, "attr", PropType::kIdentifier, true},
      {K::kStringLit, "value", PropType::kText, false},
      {K::kNumberLit, "value", PropType::kNumber, true},
      {K::kImport, "module", PropType::kDottedName, true},
      {K::kImport, "name", PropType::kIdentifier, false},
      {K::kHole, "label", PropType::kLabel, true},
  };
  return kProps;
}

const SlotRule* FindSlotRule(NodeKind parent, std::string_view slot) {
  for (const SlotRule& r : SlotSchema()) {
    if (r.parent == parent && r.slot == slot) return &r;
  }
  return nullptr;
}

std::vector<const SlotRule*> SlotsOf(NodeKind kind) {
  std::vector<const SlotRule*> out;
  for (const SlotRule& r : SlotSchema()) {
    if (r.parent == kind) out.push_back(&r);
  }
  return out;
}

std::vector<const PropRule*> PropsOf(NodeKind kind) {
  std::vector<const PropRule*> out;
  for (const PropRule& r : PropSchema()) {
    if (r.kind == kind) out.push_back(&r);
  }
  return out;
}

const PropRule* FindPropRule(NodeKind kind, std::string_view name) {
  for (const PropRule& r : PropSchema()) {
    if (r.kind == kind && r.name == name) return &r;
  }
  return nullptr;
}

bool IsStatementKind(NodeKind kind) {
  auto stmts = BodyStmt();
  return std::find(stmts.begin(), stmts.end(), kind) != stmts.end();
}

bool IsExpressionKind(NodeKind kind) {
  return std::find(kExpr.begin(), kExpr.end(), kind) != kExpr.end();
}

bool IsPythonKeyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kKeywords = {
      "False", "None",   "True",    "and",      "as",       "assert",
      "async", "await",  "break",   "class",    "continue", "def",
      "del",   "elif",   "else",    "except",   "finally",  "for",
      "from",  "global", "if",      "import",   "in",       "is",
      "lambda", "nonlocal", "not",  "or",       "pass",     "raise",
      "return", "try",   "while",   "with",     "yield"};
  return kKeywords.contains(word);
}

bool IsIdentifier(std::string_view text) {
  if (text.empty() || IsDigit(text[0])) return false;
  for (char c : text) {
    if (!IsAlpha(c) && !IsDigit(c) && c != '_') return false;
  }
  return !IsPythonKeyword(text);
}

bool IsDottedName(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view part = text.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    if (!IsIdentifier(part)) return false;
    if (dot == std::string_view::npos) return true;
    start = dot + 1;
  }
}

bool IsNumberLiteral(std::string_view text) {
  // digits [. digits] [e [+-] digits], no leading zeros on multi-digit ints.
  std::size_t i = 0;
  auto digits = [&] {
    std::size_t s = i;
    while (i < text.size() && IsDigit(text[i])) ++i;
    return i - s;
  };
  std::size_t int_digits = digits();
  if (int_digits == 0) return false;
  bool is_float = false;
  if (i < text.size() && text[i] == '.') {
    ++i;
    if (digits() == 0) return false;
    is_float = true;
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (digits() == 0) return false;
    is_float = true;
  }
  if (i != text.size()) return false;
  if (!is_float && int_digits > 1 && text[0] == '0') {
    return text.find_first_not_of('0') == std::string_view::npos;
  }
  return true;
}

bool IsValidLabel(std::string_view text) {
  if (text.empty()) return false;
  if (std::isspace(static_cast<unsigned char>(text.front())) ||
      std::isspace(static_cast<unsigned char>(text.back()))) {
    return false;
  }
  return std::none_of(text.begin(), text.end(), [](char c) {
    return c == ',' || c == '\n' || c == '\r' ||
           std::iscntrl(static_cast<unsigned char>(c));
  });
}

std::string CheckProp(PropType type, std::string_view value) {
  switch (type) {
    case PropType::kIdentifier:
      return IsIdentifier(value) ? "" : "not a Python identifier";
    case PropType::kDottedName:
      return IsDottedName(value) ? "" : "not a dotted name";
    case PropType::kNumber:
      return IsNumberLiteral(value) ? "" : "not a number literal";
    case PropType::kLabel:
      return IsValidLabel(value)
                 ? ""
                 : "labels must be non-empty, without commas, control "
                   "characters or edge whitespace";
    case PropType::kText:
      return "";
  }
  return "";
}

std::string SchemaMarkdown() {
  std::ostringstream out;
  out << "# Sketch AST schema\n\n"
      << "Generated by `langsketch schema`. Do not edit by hand.\n\n"
      << "## Slots\n\n"
      << "| Parent | Slot | Allowed children | Arity |\n"
      << "|---|---|---|---|\n";
  for (const SlotRule& r : SlotSchema()) {
    std::string allowed;
    for (NodeKind k : r.allowed) {
      if (!allowed.empty()) allowed += ", ";
      allowed += NodeKindName(k);
    }
    out << "| " << NodeKindName(r.parent) << " | " << r.slot << " | "
        << allowed << " | " << Bounds(r) << " |\n";
  }
  out << "\nKinds without slots: ";
  bool first = true;
  for (NodeKind k : AllNodeKinds()) {
    if (!SlotsOf(k).empty()) continue;
    out << (first ? "" : ", ") << NodeKindName(k);
    first = false;
  }
  out << ".\n\n## Props\n\n"
      << "| Kind | Prop | Type | Required |\n"
      << "|---|---|---|---|\n";
  for (const PropRule& r : PropSchema()) {
    out << "| " << NodeKindName(r.kind) << " | " << r.name << " | "
        << PropTypeName(r.type) << " | " << (r.required ? "yes" : "no")
        << " |\n";
  }
  out << "\n## Contextual rules\n\n"
      << "- A `Name` may not be `_`; that spelling renders a hole in an "
         "assignment target.\n"
      << "- A `FunctionDef` directly in a `ClassDef` body gets `self` on "
         "render, so none of its `Param`s may be named `self`.\n"
      << "- `Param` names are unique within one `Params`.\n"
      << "- In an `ArgList`, keyword `Arg`s follow positional ones and "
         "keyword names are unique.\n"
      << "- `Return` must sit inside a `FunctionDef` body, not directly in a "
         "class body or the module.\n";
  return out.str();
}

}  // namespace langsketch::sketch

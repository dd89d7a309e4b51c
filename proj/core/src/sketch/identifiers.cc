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

#include "langsketch/sketch/identifiers.h"

#include <cctype>
#include <set>
#include <utility>

#include "langsketch/sketch/schema.h"

namespace langsketch::sketch {
namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::size_t SkipBlanks(std::string_view line, std::size_t i) {
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  return i;
}

// Reads an identifier at i; returns it and advances i.
std::string ReadIdent(std::string_view line, std::size_t& i) {
  if (i >= line.size() || !IsIdentStart(line[i])) return "";
  std::size_t start = i;
  while (i < line.size() && IsIdentChar(line[i])) ++i;
  return std::string(line.substr(start, i - start));
}

bool ConsumeKeyword(std::string_view line, std::size_t& i,
                    std::string_view kw) {
  if (line.substr(i, kw.size()) != kw) return false;
  std::size_t after = i + kw.size();
  if (after >= line.size() || (line[after] != ' ' && line[after] != '\t')) {
    return false;
  }
  i = SkipBlanks(line, after);
  return true;
}

}  // namespace

std::string_view IdentifierKindName(IdentifierKind kind) {
  switch (kind) {
    case IdentifierKind::kVariable: return "variable";
    case IdentifierKind::kFunction: return "function";
    case IdentifierKind::kClass: return "class";
  }
  return "variable";
}

std::vector<Identifier> ExtractIdentifiers(std::string_view code) {
  std::vector<Identifier> out;
  std::set<std::string> seen;
  auto emit = [&](std::string name, IdentifierKind kind, std::size_t line) {
    if (name.empty() || IsPythonKeyword(name)) return;
    if (seen.insert(name).second) out.push_back({std::move(name), kind, line});
  };
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < code.size()) {
    std::size_t nl = code.find('\n', pos);
    if (nl == std::string_view::npos) nl = code.size();
    std::string_view line = code.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    std::size_t i = SkipBlanks(line, 0);
    std::size_t k = i;
    if (ConsumeKeyword(line, k, "async")) i = k;
    k = i;
    if (ConsumeKeyword(line, k, "def")) {
      std::string name = ReadIdent(line, k);
      k = SkipBlanks(line, k);
      if (k < line.size() && line[k] == '(') {
        emit(std::move(name), IdentifierKind::kFunction, line_no);
      }
      continue;
    }
    k = i;
    if (line.substr(k, 5) == "class" && k + 5 < line.size() &&
        (line[k + 5] == ' ' || line[k + 5] == '\t')) {
      k = SkipBlanks(line, k + 5);
      emit(ReadIdent(line, k), IdentifierKind::kClass, line_no);
      continue;
    }
    if (i != 0) continue;
    k = 0;
    std::string name = ReadIdent(line, k);
    if (name.empty()) continue;
    k = SkipBlanks(line, k);
    if (k >= line.size()) continue;
    if (line[k] == ':') {
      emit(std::move(name), IdentifierKind::kVariable, line_no);
    } else if (line[k] == '=' &&
               (k + 1 >= line.size() || line[k + 1] != '=')) {
      emit(std::move(name), IdentifierKind::kVariable, line_no);
    }
  }
  return out;
}

}  // namespace langsketch::sketch

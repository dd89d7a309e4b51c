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

#include "langsketch/nlp/tokenizer.h"

#include <cctype>
#include <string_view>

namespace langsketch::nlp {
namespace {

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

void Push(std::string_view text, std::size_t start, std::size_t end,
          std::vector<Token>& out) {
  Token t;
  t.index = out.size();
  t.text = std::string(text.substr(start, end - start));
  t.start = start;
  t.end = end;
  out.push_back(std::move(t));
}

}  // namespace

bool IsEdgePunctuation(char c) {
  constexpr std::string_view kEdge = ".,;:!?()[]{}\"'`";
  return kEdge.find(c) != std::string_view::npos;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t end = i;
    while (end < text.size() && !IsSpace(text[end])) ++end;

    std::size_t lo = i;
    std::size_t hi = end;
    while (lo < hi && IsEdgePunctuation(text[lo])) {
      Push(text, lo, lo + 1, out);
      ++lo;
    }
    std::size_t core_end = hi;
    while (core_end > lo && IsEdgePunctuation(text[core_end - 1])) --core_end;
    if (core_end > lo) Push(text, lo, core_end, out);
    for (std::size_t k = core_end; k < hi; ++k) Push(text, k, k + 1, out);
    i = end;
  }
  return out;
}

std::string Reconstruct(std::string_view text,
                        const std::vector<Token>& tokens) {
  std::string out;
  std::size_t pos = 0;
  for (const Token& t : tokens) {
    out.append(text.substr(pos, t.start - pos));
    out.append(t.text);
    pos = t.end;
  }
  out.append(text.substr(pos));
  return out;
}

}  // namespace langsketch::nlp

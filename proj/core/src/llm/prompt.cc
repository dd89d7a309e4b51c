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

#include "langsketch/llm/prompt.h"

namespace langsketch::llm {

const std::string_view kPromptInstruction =
    "Based on the description and a code sketch (which is incomplete and "
    "buggy) below, do your best to complete the code with **minimal** "
    "editions. Generate the code within a triple quotes: ```python ... ```";

std::string BuildLlmPrompt(std::string_view description,
                           std::string_view sketch_text) {
  std::string out(kPromptInstruction);
  out += "\n\n### Code Description\n\n";
  out += description;
  out += "\n\n### Current Code Draft\n\n";
  out += sketch_text;
  return out;
}

std::optional<std::string> ExtractCode(std::string_view response) {
  std::size_t line = 0;
  while (line <= response.size()) {
    std::size_t eol = response.find('\n', line);
    if (eol == std::string_view::npos) eol = response.size();
    std::string_view text = response.substr(line, eol - line);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    // Opening fence: ```python with optional trailing spaces.
    std::size_t lead = text.find_first_not_of(' ');
    if (lead != std::string_view::npos && text.substr(lead, 9) == "```python" &&
        text.find_first_not_of(' ', lead + 9) == std::string_view::npos) {
      std::string body;
      std::size_t pos = eol + 1;
      while (pos < response.size()) {
        std::size_t end = response.find('\n', pos);
        const bool last = end == std::string_view::npos;
        if (last) end = response.size();
        std::string_view l = response.substr(pos, end - pos);
        std::string_view trimmed = l;
        while (!trimmed.empty() &&
               (trimmed.front() == ' ' || trimmed.front() == '\t')) {
          trimmed.remove_prefix(1);
        }
        while (!trimmed.empty() && (trimmed.back() == ' ' ||
                                    trimmed.back() == '\r')) {
          trimmed.remove_suffix(1);
        }
        if (trimmed == "```") return body;
        body.append(l);
        if (!last) body += '\n';
        pos = end + 1;
      }
      return body;
    }
    line = eol + 1;
  }
  return std::nullopt;
}

}  // namespace langsketch::llm

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

#ifndef LANGSKETCH_LLM_PROMPT_H_
#define LANGSKETCH_LLM_PROMPT_H_

#include <optional>
#include <string>
#include <string_view>

namespace langsketch::llm {

// Instruction line of the completion prompt.
extern const std::string_view kPromptInstruction;

// The instruction, then "### Code Description", the description, then
// "### Current Code Draft" and the sketch, separated by blank lines. Both
// inputs are inserted verbatim.
std::string BuildLlmPrompt(std::string_view description,
                           std::string_view sketch_text);

// Body of the first ```python fenced block, fence lines excluded. An
// unterminated block runs to the end of the response. nullopt when there
// is no such block.
std::optional<std::string> ExtractCode(std::string_view response);

}  // namespace langsketch::llm

#endif  // LANGSKETCH_LLM_PROMPT_H_

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

#ifndef LANGSKETCH_LLM_GENERATE_H_
#define LANGSKETCH_LLM_GENERATE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "langsketch/llm/client.h"
#include "langsketch/llm/diff.h"

namespace langsketch::llm {

enum class StreamKind : std::uint8_t { kChunk, kEditScript, kError };

std::string_view StreamKindName(StreamKind kind);

struct StreamEvent {
  StreamKind kind = StreamKind::kChunk;
  // kChunk: the chunk text.
  std::string chunk;
  // kEditScript.
  EditScript script;
  std::string code;
  // Set when the response had no python fence and the whole response was
  // used as the code.
  bool no_fence = false;
  // kError: "timeout", "transport" or "cancelled".
  std::string error_code;
  std::string message;
};

// {"kind": ..., "payload": ...}
nlohmann::json StreamEventToJson(const StreamEvent& event);

// The inputs are copied before the call, so the caller's session can keep
// changing. Emits every chunk, then exactly one edit_script or error event.
void Generate(const std::string& description, const std::string& sketch_text,
              LlmClient& client,
              const std::function<void(const StreamEvent&)>& sink,
              const std::atomic<bool>* cancel = nullptr);

}  // namespace langsketch::llm

#endif  // LANGSKETCH_LLM_GENERATE_H_

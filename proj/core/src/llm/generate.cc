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

#include "langsketch/llm/generate.h"

#include <nlohmann/json.hpp>

#include "langsketch/llm/prompt.h"

namespace langsketch::llm {

std::string_view StreamKindName(StreamKind kind) {
  switch (kind) {
    case StreamKind::kChunk:
      return "chunk";
    case StreamKind::kEditScript:
      return "edit_script";
    case StreamKind::kError:
      return "error";
  }
  return "error";
}

nlohmann::json StreamEventToJson(const StreamEvent& event) {
  nlohmann::json payload;
  switch (event.kind) {
    case StreamKind::kChunk:
      payload = {{"text", event.chunk}};
      break;
    case StreamKind::kEditScript:
      payload = {{"ops", EditScriptToJson(event.script)},
                 {"code", event.code},
                 {"no_fence", event.no_fence}};
      break;
    case StreamKind::kError:
      payload = {{"code", event.error_code}, {"message", event.message}};
      break;
  }
  return {{"kind", StreamKindName(event.kind)}, {"payload", payload}};
}

void Generate(const std::string& description, const std::string& sketch_text,
              LlmClient& client,
              const std::function<void(const StreamEvent&)>& sink,
              const std::atomic<bool>* cancel) {
  const std::string prompt = BuildLlmPrompt(description, sketch_text);
  std::string response;
  try {
    client.Complete(
        prompt,
        [&](std::string_view chunk) {
          response.append(chunk);
          StreamEvent ev;
          ev.kind = StreamKind::kChunk;
          ev.chunk = std::string(chunk);
          sink(ev);
        },
        cancel);
  } catch (const LlmError& e) {
    StreamEvent ev;
    ev.kind = StreamKind::kError;
    ev.error_code = std::string(LlmErrorCodeName(e.code()));
    ev.message = e.what();
    sink(ev);
    return;
  }
  if (cancel && cancel->load()) {
    StreamEvent ev;
    ev.kind = StreamKind::kError;
    ev.error_code = std::string(LlmErrorCodeName(LlmErrorCode::kCancelled));
    ev.message = "generation cancelled";
    sink(ev);
    return;
  }
  StreamEvent ev;
  ev.kind = StreamKind::kEditScript;
  std::optional<std::string> code = ExtractCode(response);
  ev.no_fence = !code.has_value();
  ev.code = code ? *std::move(code) : response;
  ev.script = DiffLines(sketch_text, ev.code);
  sink(ev);
}

}  // namespace langsketch::llm

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

#include "langsketch/llm/client.h"

#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace langsketch::llm {

std::string_view LlmErrorCodeName(LlmErrorCode code) {
  switch (code) {
    case LlmErrorCode::kTimeout:
      return "timeout";
    case LlmErrorCode::kTransport:
      return "transport";
    case LlmErrorCode::kCancelled:
      return "cancelled";
  }
  return "transport";
}

MockScript ParseMockScript(const nlohmann::json& value) {
  MockScript script;
  const nlohmann::json* chunks = &value;
  if (value.is_object()) {
    for (const auto& [key, _] : value.items()) {
      if (key != "chunks" && key != "error" && key != "delay_ms") {
        throw std::invalid_argument("mock script: unknown field '" + key + "'");
      }
    }
    if (!value.contains("chunks")) {
      throw std::invalid_argument("mock script: missing 'chunks'");
    }
    chunks = &value["chunks"];
    if (value.contains("error")) {
      const auto& e = value["error"];
      if (e == "timeout") {
        script.error = LlmErrorCode::kTimeout;
      } else if (e == "transport") {
        script.error = LlmErrorCode::kTransport;
      } else {
        throw std::invalid_argument(
            "mock script: error must be \"timeout\" or \"transport\"");
      }
    }
    if (value.contains("delay_ms")) {
      if (!value["delay_ms"].is_number_unsigned()) {
        throw std::invalid_argument("mock script: delay_ms must be >= 0");
      }
      script.delay = std::chrono::milliseconds(value["delay_ms"].get<int>());
    }
  }
  if (!chunks->is_array()) {
    throw std::invalid_argument("mock script: chunks must be an array");
  }
  for (const auto& c : *chunks) {
    if (!c.is_string()) {
      throw std::invalid_argument("mock script: chunks must be strings");
    }
    script.chunks.push_back(c.get<std::string>());
  }
  return script;
}

MockScript LoadMockScript(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return ParseMockScript(value);
}

void MockLlmClient::Complete(std::string_view, const ChunkSink& sink,
                             const std::atomic<bool>* cancel) {
  for (const std::string& chunk : script_.chunks) {
    if (script_.delay.count() > 0) std::this_thread::sleep_for(script_.delay);
    if (cancel && cancel->load()) {
      throw LlmError(LlmErrorCode::kCancelled, "generation cancelled");
    }
    sink(chunk);
  }
  if (script_.error == LlmErrorCode::kTimeout) {
    throw LlmError(LlmErrorCode::kTimeout, "mock client timed out");
  }
  if (script_.error == LlmErrorCode::kTransport) {
    throw LlmError(LlmErrorCode::kTransport, "mock transport failure");
  }
}

}  // namespace langsketch::llm

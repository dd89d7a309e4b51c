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

#ifndef LANGSKETCH_LLM_CLIENT_H_
#define LANGSKETCH_LLM_CLIENT_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace langsketch::llm {

enum class LlmErrorCode : std::uint8_t { kTimeout, kTransport, kCancelled };

std::string_view LlmErrorCodeName(LlmErrorCode code);

class LlmError : public std::runtime_error {
 public:
  LlmError(LlmErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  LlmErrorCode code() const { return code_; }

 private:
  LlmErrorCode code_;
};

using ChunkSink = std::function<void(std::string_view chunk)>;

// Streams the completion of `prompt` into `sink`. The chunks concatenate to
// the full response. Throws LlmError; `cancel` is polled between chunks.
class LlmClient {
 public:
  virtual ~LlmClient() = default;
  virtual void Complete(std::string_view prompt, const ChunkSink& sink,
                        const std::atomic<bool>* cancel) = 0;
};

struct MockScript {
  std::vector<std::string> chunks;
  // Raised after the chunks are delivered.
  std::optional<LlmErrorCode> error;
  std::chrono::milliseconds delay{0};
};

// Either a JSON array of chunk strings or
// {"chunks": [...], "error": "timeout"|"transport", "delay_ms": N}.
// Throws std::invalid_argument.
MockScript ParseMockScript(const nlohmann::json& value);
MockScript LoadMockScript(const std::filesystem::path& path);

// Replays a script; ignores the prompt.
class MockLlmClient : public LlmClient {
 public:
  explicit MockLlmClient(MockScript script) : script_(std::move(script)) {}
  void Complete(std::string_view prompt, const ChunkSink& sink,
                const std::atomic<bool>* cancel) override;

 private:
  MockScript script_;
};

// Settings for the chat-completion client. The API key is read from the
// environment at request time and is not part of the config.
struct ClientConfig {
  std::string endpoint;
  std::string model;
  int timeout_seconds = 60;
};

inline constexpr const char* kApiKeyEnv = "SKETCH_LLM_API_KEY";

}  // namespace langsketch::llm

#endif  // LANGSKETCH_LLM_CLIENT_H_

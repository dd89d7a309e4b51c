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

#ifndef LANGSKETCH_SERVICE_PROTOCOL_H_
#define LANGSKETCH_SERVICE_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "langsketch/mapping/candidate.h"
#include "langsketch/session/session.h"

namespace langsketch::service {

inline constexpr int kProtocolVersion = 1;

// Error codes carried by {"type": "error"} messages.
namespace errc {
inline constexpr std::string_view kSchema = "schema";
inline constexpr std::string_view kVersion = "unsupported_version";
inline constexpr std::string_view kUnknownSession = "unknown_session";
inline constexpr std::string_view kStaleSuggestion = "stale_suggestion";
inline constexpr std::string_view kSuperseded = "superseded";
inline constexpr std::string_view kNoLlm = "no_llm";
inline constexpr std::string_view kInternal = "internal";
}  // namespace errc

// A request that does not follow the wire schema.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(std::string_view code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class RequestType : std::uint8_t {
  kCreateSession,
  kPromptUpdate,
  kAccept,
  kUpdateCode,
  kGenerate,
  kCloseSession,
};

std::string_view RequestTypeName(RequestType type);

struct Request {
  RequestType type = RequestType::kCreateSession;
  // Echoed back verbatim when present.
  nlohmann::json id;
  std::string session;
  std::string text;
  std::optional<std::size_t> cursor;
  std::optional<std::uint64_t> revision;
  std::string key;
  std::string code;
};

// Throws ProtocolError with errc::kSchema or errc::kVersion.
Request ParseRequest(const nlohmann::json& message);
Request ParseRequestLine(std::string_view line);

// {"v": 1, "type": type}, plus "id" when the request had one.
nlohmann::json Envelope(std::string_view type, const nlohmann::json& id = {});
nlohmann::json ErrorMessage(std::string_view code, const std::string& message,
                            const nlohmann::json& id = {});

nlohmann::json CandidateToJson(const mapping::Candidate& candidate);
nlohmann::json AssociationToJson(const mapping::Association& association);
// One entry of a suggestion batch; the preview diff is against `sketch_text`.
nlohmann::json SuggestionToJson(const session::Suggestion& suggestion,
                                std::string_view sketch_text);

}  // namespace langsketch::service

#endif  // LANGSKETCH_SERVICE_PROTOCOL_H_

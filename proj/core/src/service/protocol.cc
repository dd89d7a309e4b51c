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

#include "langsketch/service/protocol.h"

#include "langsketch/llm/diff.h"

namespace langsketch::service {

using nlohmann::json;

namespace {

constexpr RequestType kAllTypes[] = {
    RequestType::kCreateSession, RequestType::kPromptUpdate,
    RequestType::kAccept,        RequestType::kUpdateCode,
    RequestType::kGenerate,      RequestType::kCloseSession,
};

[[noreturn]] void Schema(const std::string& message) {
  throw ProtocolError(errc::kSchema, message);
}

const json* Optional(const json& m, const char* name) {
  auto it = m.find(name);
  return it == m.end() || it->is_null() ? nullptr : &*it;
}

std::string RequireString(const json& m, const char* name) {
  const json* f = Optional(m, name);
  if (!f) Schema(std::string("missing field '") + name + "'");
  if (!f->is_string()) Schema(std::string("'") + name + "' must be a string");
  return f->get<std::string>();
}

std::optional<std::uint64_t> OptionalUint(const json& m, const char* name) {
  const json* f = Optional(m, name);
  if (!f) return std::nullopt;
  if (!f->is_number_integer() || f->get<std::int64_t>() < 0) {
    Schema(std::string("'") + name + "' must be a non-negative integer");
  }
  return f->get<std::uint64_t>();
}

void AllowOnly(const json& m, std::initializer_list<std::string_view> fields) {
  for (const auto& [k, _] : m.items()) {
    if (k == "v" || k == "type" || k == "id") continue;
    bool known = false;
    for (std::string_view f : fields) known = known || f == k;
    if (!known) Schema("unknown field '" + k + "'");
  }
}

}  // namespace

std::string_view RequestTypeName(RequestType type) {
  switch (type) {
    case RequestType::kCreateSession:
      return "create_session";
    case RequestType::kPromptUpdate:
      return "prompt_update";
    case RequestType::kAccept:
      return "accept";
    case RequestType::kUpdateCode:
      return "update_code";
    case RequestType::kGenerate:
      return "generate";
    case RequestType::kCloseSession:
      return "close_session";
  }
  return "";
}

Request ParseRequest(const json& m) {
  if (!m.is_object()) Schema("message must be an object");
  Request r;
  if (auto it = m.find("id"); it != m.end()) r.id = *it;
  auto v = m.find("v");
  if (v == m.end()) Schema("missing field 'v'");
  if (!v->is_number_integer()) Schema("'v' must be an integer");
  if (v->get<std::int64_t>() != kProtocolVersion) {
    throw ProtocolError(errc::kVersion,
                        "unsupported protocol version " + v->dump());
  }
  const std::string type = RequireString(m, "type");
  bool found = false;
  for (RequestType t : kAllTypes) {
    if (RequestTypeName(t) == type) {
      r.type = t;
      found = true;
    }
  }
  if (!found) Schema("unknown message type '" + type + "'");
  switch (r.type) {
    case RequestType::kCreateSession:
      AllowOnly(m, {"code"});
      if (Optional(m, "code")) r.code = RequireString(m, "code");
      break;
    case RequestType::kPromptUpdate: {
      AllowOnly(m, {"session", "text", "cursor", "revision"});
      r.session = RequireString(m, "session");
      r.text = RequireString(m, "text");
      if (auto c = OptionalUint(m, "cursor")) {
        if (*c > r.text.size()) Schema("'cursor' is past the end of 'text'");
        r.cursor = static_cast<std::size_t>(*c);
      }
      r.revision = OptionalUint(m, "revision");
      break;
    }
    case RequestType::kAccept:
      AllowOnly(m, {"session", "key"});
      r.session = RequireString(m, "session");
      r.key = RequireString(m, "key");
      break;
    case RequestType::kUpdateCode:
      AllowOnly(m, {"session", "code"});
      r.session = RequireString(m, "session");
      r.code = RequireString(m, "code");
      break;
    case RequestType::kGenerate:
    case RequestType::kCloseSession:
      AllowOnly(m, {"session"});
      r.session = RequireString(m, "session");
      break;
  }
  return r;
}

Request ParseRequestLine(std::string_view line) {
  json m = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (m.is_discarded()) Schema("message is not valid JSON");
  return ParseRequest(m);
}

json Envelope(std::string_view type, const json& id) {
  json out = {{"v", kProtocolVersion}, {"type", type}};
  if (!id.is_null()) out["id"] = id;
  return out;
}

json ErrorMessage(std::string_view code, const std::string& message,
                  const json& id) {
  json out = Envelope("error", id);
  out["code"] = code;
  out["message"] = message;
  return out;
}

json CandidateToJson(const mapping::Candidate& c) {
  return {{"key", c.key()},
          {"source", mapping::CandidateSourceName(c.source)},
          {"kind", mapping::ElementKindName(c.kind)},
          {"display", c.display},
          {"score", c.score}};
}

json AssociationToJson(const mapping::Association& a) {
  return {{"seq", a.seq},
          {"start", a.start},
          {"end", a.end},
          {"text", a.text},
          {"kind", mapping::ElementKindName(a.kind)},
          {"rule", a.rule_id},
          {"anchor_seq", a.anchor_seq ? json(*a.anchor_seq) : json()}};
}

json SuggestionToJson(const session::Suggestion& s,
                      std::string_view sketch_text) {
  return {{"key", s.key},
          {"completion", s.completion},
          {"display", s.candidate.display},
          {"kind", mapping::ElementKindName(s.candidate.kind)},
          {"source", mapping::CandidateSourceName(s.candidate.source)},
          {"score", s.candidate.score},
          {"rule", s.proposal.rule_id},
          {"replace_start", s.replace_start},
          {"replace_end", s.replace_end},
          {"preview_diff",
           llm::EditScriptToJson(llm::DiffLines(sketch_text, s.proposal.preview))}};
}

}  // namespace langsketch::service

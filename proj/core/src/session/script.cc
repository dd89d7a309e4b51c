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

#include "langsketch/session/script.h"

#include <chrono>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "langsketch/errors.h"

namespace langsketch::session {

std::vector<ScriptRecord> ParseScript(const nlohmann::json& document) {
  if (!document.is_array()) throw ScriptError(0, "script must be an array");
  std::vector<ScriptRecord> out;
  for (std::size_t i = 0; i < document.size(); ++i) {
    const std::size_t record = i + 1;
    const nlohmann::json& r = document[i];
    if (!r.is_object()) throw ScriptError(record, "record must be an object");
    auto type = r.find("type");
    if (type == r.end() || !type->is_string()) {
      throw ScriptError(record, "missing type");
    }
    ScriptRecord rec;
    if (*type == "type_text") {
      auto text = r.find("text");
      if (text == r.end() || !text->is_string()) {
        throw ScriptError(record, "type_text needs a string text");
      }
      rec.text = text->get<std::string>();
      rec.cursor = rec.text.size();
      if (auto cursor = r.find("cursor"); cursor != r.end()) {
        if (!cursor->is_number_unsigned() ||
            cursor->get<std::size_t>() > rec.text.size()) {
          throw ScriptError(record, "cursor must be within the text");
        }
        rec.cursor = cursor->get<std::size_t>();
      }
    } else if (*type == "accept") {
      rec.type = ScriptRecord::Type::kAccept;
      auto index = r.find("suggestion_index");
      if (index == r.end() || !index->is_number_unsigned()) {
        throw ScriptError(record, "accept needs a non-negative suggestion_index");
      }
      rec.suggestion_index = index->get<std::size_t>();
    } else {
      throw ScriptError(record, "unknown type '" + type->get<std::string>() + "'");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ScriptRecord> ParseScriptText(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScriptError(0, e.what());
  }
  return ParseScript(doc);
}

std::vector<ScriptRecord> LoadScriptFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScriptError(0, "cannot open script " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseScriptText(ss.str());
}

nlohmann::json ScriptToJson(const std::vector<ScriptRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const ScriptRecord& r : records) {
    if (r.type == ScriptRecord::Type::kTypeText) {
      out.push_back({{"type", "type_text"}, {"text", r.text}, {"cursor", r.cursor}});
    } else {
      out.push_back({{"type", "accept"}, {"suggestion_index", r.suggestion_index}});
    }
  }
  return out;
}

ScriptRun RunScript(const std::vector<ScriptRecord>& records,
                    const SessionConfig& config, std::string_view code_buffer) {
  Session session(NewSessionId(), config, code_buffer);
  ScriptRun run;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ScriptRecord& r = records[i];
    if (r.type == ScriptRecord::Type::kTypeText) {
      const auto start = std::chrono::steady_clock::now();
      const auto& suggestions = session.UpdatePrompt(r.text, r.cursor);
      const auto stop = std::chrono::steady_clock::now();
      run.latencies_ms.push_back(
          std::chrono::duration<double, std::milli>(stop - start).count());
      run.suggestion_count += suggestions.size();
      continue;
    }
    if (r.suggestion_index >= session.suggestions().size()) {
      throw ScriptError(i + 1, "suggestion_index " +
                                   std::to_string(r.suggestion_index) +
                                   " out of range (" +
                                   std::to_string(session.suggestions().size()) +
                                   " suggestions)");
    }
    session.AcceptIndex(r.suggestion_index);
    ++run.acceptance_count;
  }
  run.prompt = session.prompt();
  run.sketch_text = session.SketchText();
  run.events = session.events();
  run.ast_rate = session.AstRate();
  return run;
}

}  // namespace langsketch::session

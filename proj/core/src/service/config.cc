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

#include "langsketch/service/config.h"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "langsketch/assembly/rules.h"
#include "langsketch/catalog/catalog.h"

namespace langsketch::service {

using nlohmann::json;

namespace {

[[noreturn]] void Bad(const std::string& field, const std::string& what) {
  throw std::invalid_argument("config: '" + field + "' " + what);
}

std::string PathField(const json& doc, const char* name,
                      const std::filesystem::path& base) {
  const json& v = doc[name];
  if (!v.is_string()) Bad(name, "must be a string");
  std::filesystem::path p = v.get<std::string>();
  if (p.is_relative()) p = base / p;
  return p.lexically_normal().string();
}

}  // namespace

FileConfig ParseFileConfig(const json& doc,
                           const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw std::invalid_argument("config: not an object");
  FileConfig out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "catalog") {
      out.catalog = PathField(doc, "catalog", base_dir);
    } else if (key == "rules") {
      out.rules = PathField(doc, "rules", base_dir);
    } else if (key == "mock_llm") {
      out.mock_llm = PathField(doc, "mock_llm", base_dir);
    } else if (key == "address") {
      if (!value.is_string()) Bad(key, "must be a string");
      out.address = value.get<std::string>();
    } else if (key == "port") {
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() > 65535) {
        Bad(key, "must be an integer in [0, 65535]");
      }
      out.port = value.get<std::uint16_t>();
    } else if (key == "llm") {
      if (!value.is_object()) Bad(key, "must be an object");
      llm::ClientConfig c;
      for (const auto& [k, v] : value.items()) {
        if (k == "endpoint" && v.is_string()) {
          c.endpoint = v.get<std::string>();
        } else if (k == "model" && v.is_string()) {
          c.model = v.get<std::string>();
        } else if (k == "timeout_seconds" && v.is_number_unsigned() &&
                   v.get<std::uint64_t>() > 0) {
          c.timeout_seconds = v.get<int>();
        } else {
          Bad("llm." + k, "is unknown or has the wrong type");
        }
      }
      if (c.endpoint.empty()) Bad("llm.endpoint", "is required");
      out.llm = c;
    } else {
      Bad(key, "is not a known field");
    }
  }
  return out;
}

FileConfig LoadFileConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config " + path.string());
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument("config " + path.string() + " is not JSON");
  }
  return ParseFileConfig(doc, path.parent_path());
}

session::SessionConfig MakeSessionConfig(
    const std::optional<std::string>& catalog_path,
    const std::optional<std::string>& rules_path) {
  session::SessionConfig config = session::DefaultSessionConfig();
  if (catalog_path) {
    config.catalog = std::make_shared<const catalog::SnippetCatalog>(
        catalog::LoadCatalogFile(*catalog_path));
  }
  if (rules_path) {
    config.rules = std::make_shared<const assembly::RuleSet>(
        assembly::LoadRulesFile(*rules_path));
  }
  return config;
}

}  // namespace langsketch::service

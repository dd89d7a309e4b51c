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

#ifndef LANGSKETCH_SERVICE_CONFIG_H_
#define LANGSKETCH_SERVICE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "langsketch/llm/client.h"
#include "langsketch/session/session.h"

namespace langsketch::service {

// Contents of a --config file. Relative paths are resolved against the
// file's directory. Command-line flags override every field.
struct FileConfig {
  std::optional<std::string> catalog;
  std::optional<std::string> rules;
  std::optional<std::string> mock_llm;
  std::optional<std::string> address;
  std::optional<std::uint16_t> port;
  // Present when the file has an "llm" object.
  std::optional<llm::ClientConfig> llm;
};

// Throws std::invalid_argument naming the offending field.
FileConfig ParseFileConfig(const nlohmann::json& document,
                           const std::filesystem::path& base_dir);
FileConfig LoadFileConfig(const std::filesystem::path& path);

// Starter catalog and built-in rules unless paths are given. Throws
// SchemaError, TemplateError or RuleError.
session::SessionConfig MakeSessionConfig(
    const std::optional<std::string>& catalog_path,
    const std::optional<std::string>& rules_path);

}  // namespace langsketch::service

#endif  // LANGSKETCH_SERVICE_CONFIG_H_

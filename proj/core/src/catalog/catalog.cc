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

#include "langsketch/catalog/catalog.h"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "internal/embedded_data.h"
#include "langsketch/errors.h"

namespace langsketch::catalog {
namespace {

using nlohmann::json;

const std::vector<std::size_t> kNone;

std::string RequireString(const json& entry, std::size_t index,
                          const char* field, bool required) {
  auto it = entry.find(field);
  if (it == entry.end()) {
    if (required) {
      throw SchemaError(index, std::string("missing field '") + field + "'");
    }
    return "";
  }
  if (!it->is_string()) {
    throw SchemaError(index, std::string("field '") + field +
                                 "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string NormalizeAlias(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      pending_space = true;
    }
  }
  return out;
}

SnippetCatalog::SnippetCatalog(std::vector<Snippet> snippets)
    : snippets_(std::move(snippets)) {
  for (std::size_t i = 0; i < snippets_.size(); ++i) {
    std::vector<std::string> norm;
    for (const std::string& alias : snippets_[i].aliases) {
      norm.push_back(NormalizeAlias(alias));
      auto& list = alias_index_[norm.back()];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
    normalized_.push_back(std::move(norm));
  }
}

const Snippet* SnippetCatalog::Find(std::string_view name) const {
  for (const Snippet& s : snippets_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const std::vector<std::size_t>& SnippetCatalog::ByAlias(
    std::string_view normalized) const {
  auto it = alias_index_.find(normalized);
  return it == alias_index_.end() ? kNone : it->second;
}

SnippetCatalog LoadCatalog(const json& doc) {
  if (doc.is_null()) return {};
  if (!doc.is_object()) {
    throw SchemaError(SchemaError::npos, "document must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "snippets") {
      throw SchemaError(SchemaError::npos, "unknown field '" + key + "'");
    }
  }
  auto it = doc.find("snippets");
  if (it == doc.end()) return {};
  if (!it->is_array()) {
    throw SchemaError(SchemaError::npos, "'snippets' must be an array");
  }
  std::vector<Snippet> out;
  std::set<std::string> names;
  static const std::set<std::string> kFields = {"name", "aliases", "kind",
                                                "template", "description"};
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& entry = (*it)[i];
    if (!entry.is_object()) throw SchemaError(i, "entry must be an object");
    for (const auto& [key, value] : entry.items()) {
      if (!kFields.contains(key)) {
        throw SchemaError(i, "unknown field '" + key + "'");
      }
    }
    Snippet s;
    s.name = RequireString(entry, i, "name", true);
    if (s.name.empty()) throw SchemaError(i, "name must not be empty");
    if (!names.insert(s.name).second) {
      throw SchemaError(i, "duplicate snippet name '" + s.name + "'");
    }
    auto aliases = entry.find("aliases");
    if (aliases == entry.end() || !aliases->is_array() || aliases->empty()) {
      throw SchemaError(i, "'aliases' must be a non-empty array of strings");
    }
    for (const json& a : *aliases) {
      if (!a.is_string() || NormalizeAlias(a.get<std::string>()).empty()) {
        throw SchemaError(i, "aliases must be strings with a letter or digit");
      }
      s.aliases.push_back(a.get<std::string>());
    }
    const std::string kind = RequireString(entry, i, "kind", true);
    auto parsed_kind = ParseSnippetKind(kind);
    if (!parsed_kind) throw SchemaError(i, "unknown kind '" + kind + "'");
    s.kind = *parsed_kind;
    s.template_text = RequireString(entry, i, "template", true);
    s.description = RequireString(entry, i, "description", false);
    ParsedTemplate t = ParseTemplate(s.template_text, s.kind, s.name);
    s.fragment = std::move(t.fragment);
    s.holes = std::move(t.holes);
    out.push_back(std::move(s));
  }
  return SnippetCatalog(std::move(out));
}

SnippetCatalog LoadCatalogText(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(SchemaError::npos, e.what());
  }
  return LoadCatalog(doc);
}

SnippetCatalog LoadCatalogFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SchemaError(SchemaError::npos, "cannot open catalog file " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return LoadCatalogText(ss.str());
}

const SnippetCatalog& StarterCatalog() {
  static const SnippetCatalog catalog =
      LoadCatalogText(internal::EmbeddedStarterCatalog());
  return catalog;
}

json SerializeCatalog(const SnippetCatalog& catalog) {
  json snippets = json::array();
  for (const Snippet& s : catalog.snippets()) {
    json entry = {{"name", s.name},
                  {"aliases", s.aliases},
                  {"kind", SnippetKindName(s.kind)},
                  {"template", s.template_text}};
    if (!s.description.empty()) entry["description"] = s.description;
    snippets.push_back(std::move(entry));
  }
  return {{"snippets", std::move(snippets)}};
}

sketch::NodeId Instantiate(sketch::Sketch& sketch, const Snippet& snippet) {
  return sketch.Instantiate(snippet.fragment);
}

}  // namespace langsketch::catalog

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

#ifndef LANGSKETCH_CATALOG_CATALOG_H_
#define LANGSKETCH_CATALOG_CATALOG_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "langsketch/catalog/template.h"
#include "langsketch/sketch/sketch.h"

namespace langsketch::catalog {

struct Snippet {
  std::string name;
  std::vector<std::string> aliases;
  SnippetKind kind = SnippetKind::kStatement;
  std::string template_text;
  std::string description;
  std::vector<TemplateHole> holes;
  sketch::Fragment fragment;

  bool operator==(const Snippet&) const = default;
};

// Lowercase, punctuation to spaces, single spaces, trimmed.
std::string NormalizeAlias(std::string_view text);

class SnippetCatalog {
 public:
  SnippetCatalog() = default;
  explicit SnippetCatalog(std::vector<Snippet> snippets);

  const std::vector<Snippet>& snippets() const { return snippets_; }
  const Snippet* Find(std::string_view name) const;
  // Snippets whose normalized alias equals the key.
  const std::vector<std::size_t>& ByAlias(std::string_view normalized) const;
  // Normalized alias of each (snippet index, alias index) pair.
  const std::vector<std::vector<std::string>>& normalized_aliases() const {
    return normalized_;
  }
  bool empty() const { return snippets_.empty(); }
  std::size_t size() const { return snippets_.size(); }

  bool operator==(const SnippetCatalog& other) const {
    return snippets_ == other.snippets_;
  }

 private:
  std::vector<Snippet> snippets_;
  std::vector<std::vector<std::string>> normalized_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> alias_index_;
};

// Loads {"snippets": [{name, aliases, kind, template, description}]}.
// Throws SchemaError or TemplateError.
SnippetCatalog LoadCatalog(const nlohmann::json& document);
SnippetCatalog LoadCatalogText(std::string_view text);
SnippetCatalog LoadCatalogFile(const std::string& path);
const SnippetCatalog& StarterCatalog();

nlohmann::json SerializeCatalog(const SnippetCatalog& catalog);

// Allocates a fresh, detached copy of the snippet's fragment.
sketch::NodeId Instantiate(sketch::Sketch& sketch, const Snippet& snippet);

}  // namespace langsketch::catalog

#endif  // LANGSKETCH_CATALOG_CATALOG_H_

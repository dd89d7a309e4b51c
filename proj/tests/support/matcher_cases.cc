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

#include "support/matcher_cases.h"

#include "langsketch/catalog/catalog.h"
#include "langsketch/catalog/code_index.h"
#include "langsketch/mapping/matcher.h"

namespace langsketch::testing {
namespace {

// Smallest valid template per kind; the matcher only looks at aliases.
const char* TemplateFor(const std::string& kind) {
  if (kind == "class") return "class Thing:\n    ${1:body}\n";
  if (kind == "function") return "def thing():\n    ${1:body}\n";
  if (kind == "expression") return "thing(${1:arg})";
  if (kind == "variable") return "thing = ${1:value}\n";
  return "thing(${1:arg})\n";
}

sketch::IdentifierKind IdKind(const std::string& kind) {
  if (kind == "function") return sketch::IdentifierKind::kFunction;
  if (kind == "class") return sketch::IdentifierKind::kClass;
  return sketch::IdentifierKind::kVariable;
}

}  // namespace

nlohmann::json RankCase(const nlohmann::json& c) {
  nlohmann::json doc = {{"snippets", nlohmann::json::array()}};
  for (const auto& s : c["snippets"]) {
    doc["snippets"].push_back({{"name", s["name"]},
                               {"aliases", s["aliases"]},
                               {"kind", s["kind"]},
                               {"template", TemplateFor(s["kind"])}});
  }
  const catalog::SnippetCatalog snippets = catalog::LoadCatalog(doc);
  catalog::CodeIndex index;
  for (const auto& id : c["identifiers"]) {
    index.identifiers.push_back(
        {id["name"].get<std::string>(), IdKind(id["kind"]), 1});
  }
  nlohmann::json out = nlohmann::json::array();
  for (const mapping::Candidate& cand : mapping::MatchIndependent(
           c["phrase"].get<std::string>(), snippets, &index)) {
    out.push_back({cand.key(), cand.display, cand.score});
  }
  return out;
}

}  // namespace langsketch::testing

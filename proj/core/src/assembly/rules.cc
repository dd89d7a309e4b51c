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

#include "langsketch/assembly/rules.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "internal/embedded_data.h"
#include "langsketch/errors.h"

namespace langsketch::assembly {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 6> kActionNames = {
    "InsertIntoBody", "AppendArgument", "AppendStatementInBody",
    "AppendSibling",  "BindAsArgumentName", "AttachAtModule"};

[[noreturn]] void Fail(const std::string& rule, const std::string& reason) {
  throw RuleError(rule.empty() ? "rules: " + reason
                               : "rule '" + rule + "': " + reason);
}

std::vector<std::string> Strings(const json& value, const std::string& rule,
                                 const char* field) {
  if (!value.is_array()) Fail(rule, std::string(field) + " must be an array");
  std::vector<std::string> out;
  for (const json& v : value) {
    if (!v.is_string()) Fail(rule, std::string(field) + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::set<mapping::ElementKind> Kinds(const json& rule_json,
                                     const std::string& id,
                                     const char* field) {
  std::set<mapping::ElementKind> out;
  auto it = rule_json.find(field);
  if (it == rule_json.end()) Fail(id, std::string("missing ") + field);
  for (const std::string& name : Strings(*it, id, field)) {
    auto kind = mapping::ParseElementKind(name);
    if (!kind) Fail(id, "unknown element kind '" + name + "'");
    out.insert(*kind);
  }
  return out;
}

PathStep ParseStep(const json& step, const std::string& id) {
  if (!step.is_object()) Fail(id, "path steps must be objects");
  static const std::set<std::string> kFields = {"dir", "labels", "lexical",
                                                "pos", "optional"};
  for (const auto& [key, value] : step.items()) {
    if (!kFields.contains(key)) Fail(id, "unknown step field '" + key + "'");
  }
  PathStep out;
  auto dir = step.find("dir");
  if (dir == step.end() || !dir->is_string()) Fail(id, "step needs a dir");
  if (*dir == "toward-head") {
    out.dir = Direction::kTowardHead;
  } else if (*dir == "toward-dependent") {
    out.dir = Direction::kTowardDependent;
  } else {
    Fail(id, "unknown dir '" + dir->get<std::string>() + "'");
  }
  auto labels = step.find("labels");
  if (labels == step.end()) Fail(id, "step needs labels");
  for (const std::string& name : Strings(*labels, id, "labels")) {
    auto label = nlp::ParseDepLabel(name);
    if (!label) Fail(id, "unknown label '" + name + "'");
    out.labels.insert(*label);
  }
  if (out.labels.empty()) Fail(id, "labels must not be empty");
  if (auto it = step.find("lexical"); it != step.end()) {
    for (const std::string& word : Strings(*it, id, "lexical")) {
      out.lexical.insert(word);
    }
  }
  if (auto it = step.find("pos"); it != step.end()) {
    for (const std::string& name : Strings(*it, id, "pos")) {
      auto tag = nlp::ParsePosTag(name);
      if (!tag) Fail(id, "unknown POS tag '" + name + "'");
      out.pos.insert(*tag);
    }
  }
  if (auto it = step.find("optional"); it != step.end()) {
    if (!it->is_boolean()) Fail(id, "optional must be a boolean");
    out.optional = it->get<bool>();
  }
  return out;
}

json KindsJson(const std::set<mapping::ElementKind>& kinds) {
  json out = json::array();
  for (mapping::ElementKind k : kinds) out.push_back(mapping::ElementKindName(k));
  return out;
}

}  // namespace

std::string_view AssemblyActionName(AssemblyAction action) {
  return kActionNames[static_cast<std::size_t>(action)];
}

std::optional<AssemblyAction> ParseAssemblyAction(std::string_view name) {
  for (std::size_t i = 0; i < kActionNames.size(); ++i) {
    if (kActionNames[i] == name) return static_cast<AssemblyAction>(i);
  }
  return std::nullopt;
}

RuleSet::RuleSet(std::vector<AssemblyRule> rules) : rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end(),
            [](const AssemblyRule& a, const AssemblyRule& b) {
              return a.priority != b.priority ? a.priority < b.priority
                                              : a.id < b.id;
            });
}

const AssemblyRule* RuleSet::Find(std::string_view id) const {
  for (const AssemblyRule& r : rules_) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

RuleSet LoadRules(const json& document) {
  if (!document.is_array()) Fail("", "document must be an array of rules");
  std::vector<AssemblyRule> rules;
  std::set<std::string> ids;
  static const std::set<std::string> kFields = {
      "id",           "priority", "path", "anchor_kinds", "incoming_kinds",
      "action",       "anchor_as_first_arg"};
  for (std::size_t i = 0; i < document.size(); ++i) {
    const json& r = document[i];
    if (!r.is_object()) Fail("", "rule " + std::to_string(i) + " is not an object");
    auto id_it = r.find("id");
    if (id_it == r.end() || !id_it->is_string() ||
        id_it->get<std::string>().empty()) {
      Fail("", "rule " + std::to_string(i) + " needs a non-empty id");
    }
    AssemblyRule rule;
    rule.id = id_it->get<std::string>();
    if (!ids.insert(rule.id).second) Fail(rule.id, "duplicate id");
    for (const auto& [key, value] : r.items()) {
      if (!kFields.contains(key)) Fail(rule.id, "unknown field '" + key + "'");
    }
    auto prio = r.find("priority");
    if (prio == r.end() || !prio->is_number_integer()) {
      Fail(rule.id, "priority must be an integer");
    }
    rule.priority = prio->get<int>();
    auto action = r.find("action");
    if (action == r.end() || !action->is_string()) Fail(rule.id, "missing action");
    auto parsed = ParseAssemblyAction(action->get<std::string>());
    if (!parsed) Fail(rule.id, "unknown action '" + action->get<std::string>() + "'");
    rule.action = *parsed;
    auto path = r.find("path");
    if (path == r.end() || !path->is_array()) Fail(rule.id, "path must be an array");
    for (const json& step : *path) rule.pattern.path.push_back(ParseStep(step, rule.id));
    if (rule.pattern.path.empty() &&
        rule.action != AssemblyAction::kAttachAtModule) {
      Fail(rule.id, "only AttachAtModule rules may have an empty path");
    }
    rule.pattern.anchor_kinds = Kinds(r, rule.id, "anchor_kinds");
    rule.pattern.incoming_kinds = Kinds(r, rule.id, "incoming_kinds");
    if (rule.pattern.incoming_kinds.empty()) {
      Fail(rule.id, "incoming_kinds must not be empty");
    }
    if (!rule.pattern.path.empty() && rule.pattern.anchor_kinds.empty()) {
      Fail(rule.id, "anchored rules need anchor_kinds");
    }
    if (auto it = r.find("anchor_as_first_arg"); it != r.end()) {
      if (!it->is_boolean()) Fail(rule.id, "anchor_as_first_arg must be a boolean");
      rule.anchor_as_first_arg = it->get<bool>();
    }
    rules.push_back(std::move(rule));
  }
  return RuleSet(std::move(rules));
}

RuleSet LoadRulesText(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail("", e.what());
  }
  return LoadRules(doc);
}

RuleSet LoadRulesFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("", "cannot open rule file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return LoadRulesText(ss.str());
}

const RuleSet& DefaultRules() {
  static const RuleSet rules = LoadRulesText(internal::EmbeddedRules());
  return rules;
}

json SerializeRules(const RuleSet& rules) {
  json out = json::array();
  for (const AssemblyRule& r : rules.rules()) {
    json path = json::array();
    for (const PathStep& s : r.pattern.path) {
      json step = {{"dir", s.dir == Direction::kTowardHead ? "toward-head"
                                                           : "toward-dependent"}};
      json labels = json::array();
      for (nlp::DepLabel l : s.labels) labels.push_back(nlp::DepLabelName(l));
      step["labels"] = labels;
      if (!s.lexical.empty()) step["lexical"] = s.lexical;
      if (!s.pos.empty()) {
        json pos = json::array();
        for (nlp::PosTag t : s.pos) pos.push_back(nlp::PosTagName(t));
        step["pos"] = pos;
      }
      if (s.optional) step["optional"] = true;
      path.push_back(std::move(step));
    }
    json rule = {{"id", r.id},
                 {"priority", r.priority},
                 {"path", path},
                 {"anchor_kinds", KindsJson(r.pattern.anchor_kinds)},
                 {"incoming_kinds", KindsJson(r.pattern.incoming_kinds)},
                 {"action", AssemblyActionName(r.action)}};
    if (r.anchor_as_first_arg) rule["anchor_as_first_arg"] = true;
    out.push_back(std::move(rule));
  }
  return out;
}

}  // namespace langsketch::assembly

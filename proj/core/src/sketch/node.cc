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

#include "langsketch/sketch/node.h"

#include <array>
#include <utility>

namespace langsketch::sketch {
namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, kNodeKindCount>
    kKindNames = {{
        {NodeKind::kModule, "Module"},
        {NodeKind::kClassDef, "ClassDef"},
        {NodeKind::kFunctionDef, "FunctionDef"},
        {NodeKind::kParams, "Params"},
        {NodeKind::kParam, "Param"},
        {NodeKind::kBody, "Body"},
        {NodeKind::kAssign, "Assign"},
        {NodeKind::kExprStmt, "ExprStmt"},
        {NodeKind::kCall, "Call"},
        {NodeKind::kArgList, "ArgList"},
        {NodeKind::kArg, "Arg"},
        {NodeKind::kName, "Name"},
        {NodeKind::kAttribute, "Attribute"},
        {NodeKind::kStringLit, "StringLit"},
        {NodeKind::kNumberLit, "NumberLit"},
        {NodeKind::kReturn, "Return"},
        {NodeKind::kImport, "Import"},
        {NodeKind::kDecorator, "Decorator"},
        {NodeKind::kPass, "Pass"},
        {NodeKind::kHole, "Hole"},
    }};

const std::vector<NodeId> kNoChildren;

std::string Lookup(const Props& props, std::string_view name) {
  auto it = props.find(std::string(name));
  return it == props.end() ? std::string() : it->second;
}

// Drops empty values so that empty and absent compare equal.
Props Normalized(const Props& props) {
  Props out;
  for (const auto& [k, v] : props) {
    if (!v.empty()) out.emplace(k, v);
  }
  return out;
}

}  // namespace

std::string_view NodeKindName(NodeKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)].second;
}

std::optional<NodeKind> ParseNodeKind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<NodeKind> AllNodeKinds() {
  std::vector<NodeKind> out;
  for (const auto& [k, n] : kKindNames) out.push_back(k);
  return out;
}

std::string SketchNode::prop(std::string_view name) const {
  return Lookup(props, name);
}

const std::vector<NodeId>& SketchNode::slot(std::string_view name) const {
  auto it = slots.find(std::string(name));
  return it == slots.end() ? kNoChildren : it->second;
}

std::string Fragment::prop(std::string_view name) const {
  return Lookup(props, name);
}

bool Fragment::operator==(const Fragment& other) const {
  if (kind != other.kind || Normalized(props) != Normalized(other.props)) {
    return false;
  }
  // Empty slots and missing slots are the same.
  auto same_slots = [](const auto& a, const auto& b) {
    for (const auto& [name, children] : a) {
      auto it = b.find(name);
      if (it == b.end()) {
        if (!children.empty()) return false;
      } else if (it->second != children) {
        return false;
      }
    }
    return true;
  };
  return same_slots(slots, other.slots) && same_slots(other.slots, slots);
}

namespace build {

Fragment Name(std::string name) {
  return {NodeKind::kName, {{"name", std::move(name)}}, {}};
}

Fragment Hole(std::string label) {
  return {NodeKind::kHole, {{"label", std::move(label)}}, {}};
}

Fragment String(std::string value) {
  return {NodeKind::kStringLit, {{"value", std::move(value)}}, {}};
}

Fragment Number(std::string value) {
  return {NodeKind::kNumberLit, {{"value", std::move(value)}}, {}};
}

Fragment Attribute(Fragment value, std::string attr) {
  return {NodeKind::kAttribute,
          {{"attr", std::move(attr)}},
          {{"value", {std::move(value)}}}};
}

Fragment Arg(Fragment value, std::string name) {
  Fragment f{NodeKind::kArg, {}, {{"value", {std::move(value)}}}};
  if (!name.empty()) f.props["name"] = std::move(name);
  return f;
}

Fragment Call(Fragment func, std::vector<Fragment> args) {
  Fragment list{NodeKind::kArgList, {}, {{"items", std::move(args)}}};
  return {NodeKind::kCall,
          {},
          {{"func", {std::move(func)}}, {"args", {std::move(list)}}}};
}

Fragment ExprStmt(Fragment value) {
  return {NodeKind::kExprStmt, {}, {{"value", {std::move(value)}}}};
}

Fragment Assign(Fragment target, Fragment value) {
  return {NodeKind::kAssign,
          {},
          {{"target", {std::move(target)}}, {"value", {std::move(value)}}}};
}

Fragment Return(std::optional<Fragment> value) {
  Fragment f{NodeKind::kReturn, {}, {}};
  if (value) f.slots["value"].push_back(std::move(*value));
  return f;
}

Fragment Pass() { return {NodeKind::kPass, {}, {}}; }

Fragment Import(std::string module, std::string name) {
  Fragment f{NodeKind::kImport, {{"module", std::move(module)}}, {}};
  if (!name.empty()) f.props["name"] = std::move(name);
  return f;
}

Fragment Decorator(Fragment value) {
  return {NodeKind::kDecorator, {}, {{"value", {std::move(value)}}}};
}

Fragment Param(std::string name) {
  return {NodeKind::kParam, {{"name", std::move(name)}}, {}};
}

Fragment FunctionDef(std::string name, std::vector<std::string> params,
                     std::vector<Fragment> body,
                     std::optional<Fragment> decorator) {
  Fragment p{NodeKind::kParams, {}, {{"items", {}}}};
  for (auto& n : params) p.slots["items"].push_back(Param(std::move(n)));
  Fragment b{NodeKind::kBody, {}, {{"stmts", std::move(body)}}};
  Fragment f{NodeKind::kFunctionDef,
             {{"name", std::move(name)}},
             {{"params", {std::move(p)}}, {"body", {std::move(b)}}}};
  if (decorator) f.slots["decorators"].push_back(std::move(*decorator));
  return f;
}

Fragment ClassDef(std::string name, std::string base,
                  std::vector<Fragment> body,
                  std::optional<Fragment> decorator) {
  Fragment b{NodeKind::kBody, {}, {{"stmts", std::move(body)}}};
  Fragment f{NodeKind::kClassDef,
             {{"name", std::move(name)}},
             {{"body", {std::move(b)}}}};
  if (!base.empty()) f.props["base"] = std::move(base);
  if (decorator) f.slots["decorators"].push_back(std::move(*decorator));
  return f;
}

Fragment Module(std::vector<Fragment> body) {
  return {NodeKind::kModule, {}, {{"body", std::move(body)}}};
}

}  // namespace build
}  // namespace langsketch::sketch

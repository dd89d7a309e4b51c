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

#ifndef LANGSKETCH_SKETCH_NODE_H_
#define LANGSKETCH_SKETCH_NODE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langsketch::sketch {

enum class NodeKind : std::uint8_t {
  kModule,
  kClassDef,
  kFunctionDef,
  kParams,
  kParam,
  kBody,
  kAssign,
  kExprStmt,
  kCall,
  kArgList,
  kArg,
  kName,
  kAttribute,
  kStringLit,
  kNumberLit,
  kReturn,
  kImport,
  kDecorator,
  kPass,
  kHole,
};

inline constexpr int kNodeKindCount = 20;

std::string_view NodeKindName(NodeKind kind);
std::optional<NodeKind> ParseNodeKind(std::string_view name);
std::vector<NodeKind> AllNodeKinds();

using NodeId = std::uint32_t;
// An empty value is the same as an absent prop.
using Props = std::map<std::string, std::string>;

struct SketchNode {
  NodeId id = 0;
  NodeKind kind = NodeKind::kModule;
  Props props;
  std::map<std::string, std::vector<NodeId>> slots;
  std::optional<NodeId> parent;
  std::string parent_slot;

  std::string prop(std::string_view name) const;
  const std::vector<NodeId>& slot(std::string_view name) const;
};

// An id-free subtree value, used for templates, inferred elements and
// structural comparison.
struct Fragment {
  NodeKind kind = NodeKind::kHole;
  Props props;
  std::map<std::string, std::vector<Fragment>> slots;

  bool operator==(const Fragment& other) const;
  std::string prop(std::string_view name) const;
};

// Convenience builders. Containers get their default children.
namespace build {

Fragment Name(std::string name);
Fragment Hole(std::string label);
Fragment String(std::string value);
Fragment Number(std::string value);
Fragment Attribute(Fragment value, std::string attr);
Fragment Arg(Fragment value, std::string name = "");
Fragment Call(Fragment func, std::vector<Fragment> args = {});
Fragment ExprStmt(Fragment value);
Fragment Assign(Fragment target, Fragment value);
Fragment Return(std::optional<Fragment> value = std::nullopt);
Fragment Pass();
Fragment Import(std::string module, std::string name = "");
Fragment Decorator(Fragment value);
Fragment Param(std::string name);
Fragment FunctionDef(std::string name, std::vector<std::string> params = {},
                     std::vector<Fragment> body = {},
                     std::optional<Fragment> decorator = std::nullopt);
Fragment ClassDef(std::string name, std::string base = "",
                  std::vector<Fragment> body = {},
                  std::optional<Fragment> decorator = std::nullopt);
Fragment Module(std::vector<Fragment> body = {});

}  // namespace build

}  // namespace langsketch::sketch

#endif  // LANGSKETCH_SKETCH_NODE_H_

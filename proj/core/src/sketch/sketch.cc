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

#include "langsketch/sketch/sketch.h"

#include <algorithm>
#include <set>
#include <utility>
#include <stdexcept>

#include "langsketch/sketch/schema.h"

namespace langsketch::sketch {
namespace {

Violation Make(ViolationCode code, NodeId node, std::string detail) {
  return {code, node, std::move(detail)};
}

std::string Where(const SketchNode& n) {
  return std::string(NodeKindName(n.kind)) + "#" + std::to_string(n.id);
}

void CheckProps(const SketchNode& n, std::vector<Violation>& out) {
  for (const auto& [name, value] : n.props) {
    if (FindPropRule(n.kind, name) == nullptr) {
      out.push_back(Make(ViolationCode::kInvalidProp, n.id,
                         Where(n) + " has no prop '" + name + "'"));
    }
  }
  for (const PropRule* rule : PropsOf(n.kind)) {
    const std::string value = n.prop(rule->name);
    if (value.empty()) {
      if (!rule->required) continue;
      ViolationCode code = ViolationCode::kMissingName;
      if (rule->type == PropType::kLabel) code = ViolationCode::kMissingLabel;
      if (rule->type == PropType::kNumber) code = ViolationCode::kInvalidProp;
      out.push_back(Make(code, n.id,
                         Where(n) + " requires '" + std::string(rule->name) +
                             "'"));
      continue;
    }
    std::string why = CheckProp(rule->type, value);
    if (!why.empty()) {
      const bool ident = rule->type == PropType::kIdentifier ||
                         rule->type == PropType::kDottedName;
      out.push_back(Make(ident ? ViolationCode::kInvalidIdentifier
                               : ViolationCode::kInvalidProp,
                         n.id,
                         Where(n) + " " + std::string(rule->name) + " '" +
                             value + "': " + why));
    }
  }
  if (n.kind == NodeKind::kName && n.prop("name") == "_") {
    out.push_back(Make(ViolationCode::kInvalidIdentifier, n.id,
                       Where(n) + " name '_' is reserved"));
  }
}

void CheckContext(const Sketch& s, const SketchNode& n,
                  std::vector<Violation>& out) {
  switch (n.kind) {
    case NodeKind::kParams: {
      std::set<std::string> seen;
      for (NodeId p : n.slot("items")) {
        if (!s.contains(p)) continue;
        const std::string name = s.node(p).prop("name");
        if (!name.empty() && !seen.insert(name).second) {
          out.push_back(Make(ViolationCode::kDuplicateParam, n.id,
                             "duplicate parameter '" + name + "'"));
        }
      }
      if (seen.contains("self") && n.parent) {
        const SketchNode& fn = s.node(*n.parent);
        if (fn.parent) {
          const SketchNode& body = s.node(*fn.parent);
          if (body.kind == NodeKind::kBody && body.parent &&
              s.node(*body.parent).kind == NodeKind::kClassDef) {
            out.push_back(Make(ViolationCode::kRedundantSelf, n.id,
                               "method parameters must not list self; it is "
                               "added on render"));
          }
        }
      }
      break;
    }
    case NodeKind::kArgList: {
      bool keyword_seen = false;
      std::set<std::string> names;
      for (NodeId a : n.slot("items")) {
        if (!s.contains(a)) continue;
        const std::string name = s.node(a).prop("name");
        if (name.empty()) {
          if (keyword_seen) {
            out.push_back(Make(ViolationCode::kArgOrder, n.id,
                               "positional argument after keyword argument"));
          }
        } else {
          keyword_seen = true;
          if (!names.insert(name).second) {
            out.push_back(Make(ViolationCode::kDuplicateKeyword, n.id,
                               "keyword argument '" + name + "' repeated"));
          }
        }
      }
      break;
    }
    case NodeKind::kReturn: {
      for (NodeId a : s.Ancestors(n.id)) {
        const NodeKind k = s.node(a).kind;
        if (k == NodeKind::kFunctionDef) break;
        if (k == NodeKind::kClassDef || k == NodeKind::kModule) {
          out.push_back(Make(ViolationCode::kReturnOutsideFunction, n.id,
                             "return outside a function body"));
          break;
        }
      }
      break;
    }
    default:
      break;
  }
}

// Checks one node's slots, props and contextual rules.
void CheckNode(const Sketch& s, NodeId id, std::vector<Violation>& out) {
  const SketchNode& n = s.node(id);
  for (const auto& [slot, children] : n.slots) {
    const SlotRule* rule = FindSlotRule(n.kind, slot);
    if (rule == nullptr) {
      if (!children.empty()) {
        out.push_back(Make(ViolationCode::kSlotViolation, id,
                           Where(n) + " has no slot '" + slot + "'"));
      }
      continue;
    }
    for (NodeId c : children) {
      if (!s.contains(c)) {
        out.push_back(Make(ViolationCode::kBrokenLink, id,
                           Where(n) + "." + slot + " references missing node " +
                               std::to_string(c)));
        continue;
      }
      const SketchNode& child = s.node(c);
      if (child.parent != id || child.parent_slot != slot) {
        out.push_back(Make(ViolationCode::kBrokenLink, c,
                           Where(child) + " parent link does not match"));
      }
      if (!rule->Allows(child.kind)) {
        out.push_back(Make(ViolationCode::kSlotViolation, c,
                           Where(n) + "." + slot + " cannot hold " +
                               std::string(NodeKindName(child.kind))));
      }
    }
  }
  for (const SlotRule* rule : SlotsOf(n.kind)) {
    const std::size_t count = n.slot(rule->slot).size();
    if (count < rule->min || count > rule->max) {
      out.push_back(Make(ViolationCode::kArity, id,
                         Where(n) + "." + std::string(rule->slot) + " holds " +
                             std::to_string(count) + " children"));
    }
  }
  CheckProps(n, out);
  CheckContext(s, n, out);
}

}  // namespace

std::string_view ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kSlotViolation: return "SlotViolation";
    case ViolationCode::kArity: return "Arity";
    case ViolationCode::kCycle: return "CycleError";
    case ViolationCode::kMissingName: return "MissingName";
    case ViolationCode::kInvalidIdentifier: return "InvalidIdentifier";
    case ViolationCode::kInvalidProp: return "InvalidProp";
    case ViolationCode::kMissingLabel: return "MissingLabel";
    case ViolationCode::kRedundantSelf: return "RedundantSelf";
    case ViolationCode::kDuplicateParam: return "DuplicateParam";
    case ViolationCode::kDuplicateKeyword: return "DuplicateKeyword";
    case ViolationCode::kArgOrder: return "ArgOrder";
    case ViolationCode::kReturnOutsideFunction: return "ReturnOutsideFunction";
    case ViolationCode::kUnknownNode: return "UnknownNode";
    case ViolationCode::kAlreadyAttached: return "AlreadyAttached";
    case ViolationCode::kNotAttached: return "NotAttached";
    case ViolationCode::kBrokenLink: return "BrokenLink";
    case ViolationCode::kBadRoot: return "BadRoot";
  }
  return "Unknown";
}

std::string Violation::ToString() const {
  return std::string(ViolationCodeName(code)) + ": " + detail;
}

Sketch::Sketch() {
  root_ = next_id_++;
  nodes_[root_] = SketchNode{root_, NodeKind::kModule, {}, {{"body", {}}}, {},
                             ""};
}

Sketch Sketch::FromNodes(NodeId root, std::map<NodeId, SketchNode> nodes,
                         NodeId next_id) {
  Sketch s;
  s.root_ = root;
  s.nodes_ = std::move(nodes);
  s.next_id_ = next_id;
  return s;
}

const SketchNode& Sketch::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw std::out_of_range("no sketch node " + std::to_string(id));
  }
  return it->second;
}

SketchNode& Sketch::mut(NodeId id) {
  return const_cast<SketchNode&>(std::as_const(*this).node(id));
}

NodeId Sketch::NewNode(NodeKind kind, Props props) {
  for (const auto& [name, value] : props) {
    if (FindPropRule(kind, name) == nullptr) {
      throw std::invalid_argument(std::string(NodeKindName(kind)) +
                                  " has no prop '" + name + "'");
    }
  }
  const NodeId id = next_id_++;
  SketchNode n;
  n.id = id;
  n.kind = kind;
  n.props = std::move(props);
  for (const SlotRule* rule : SlotsOf(kind)) n.slots[std::string(rule->slot)];
  nodes_[id] = std::move(n);
  auto add_default = [&](std::string_view slot, NodeKind child_kind) {
    NodeId c = NewNode(child_kind);
    SketchNode& child = mut(c);
    child.parent = id;
    child.parent_slot = std::string(slot);
    mut(id).slots[std::string(slot)].push_back(c);
  };
  if (kind == NodeKind::kFunctionDef) {
    add_default("params", NodeKind::kParams);
    add_default("body", NodeKind::kBody);
  } else if (kind == NodeKind::kClassDef) {
    add_default("body", NodeKind::kBody);
  } else if (kind == NodeKind::kCall) {
    add_default("args", NodeKind::kArgList);
  }
  return id;
}

std::optional<Violation> Sketch::SetProp(NodeId id, std::string_view prop,
                                        std::string value) {
  if (!contains(id)) {
    return Violation{ViolationCode::kUnknownNode, id, "no such node"};
  }
  const NodeKind kind = node(id).kind;
  if (FindPropRule(kind, prop) == nullptr) {
    return Violation{ViolationCode::kInvalidProp, id,
                     std::string(NodeKindName(kind)) + " has no prop '" +
                         std::string(prop) + "'"};
  }
  if (value.empty()) {
    mut(id).props.erase(std::string(prop));
  } else {
    mut(id).props[std::string(prop)] = std::move(value);
  }
  return std::nullopt;
}

std::vector<NodeId> Sketch::Ancestors(NodeId id) const {
  std::vector<NodeId> out;
  std::optional<NodeId> cur = node(id).parent;
  while (cur && out.size() <= nodes_.size()) {
    out.push_back(*cur);
    auto it = nodes_.find(*cur);
    if (it == nodes_.end()) break;
    cur = it->second.parent;
  }
  return out;
}

bool Sketch::IsAncestor(NodeId ancestor, NodeId id) const {
  auto a = Ancestors(id);
  return std::find(a.begin(), a.end(), ancestor) != a.end();
}

NodeId Sketch::TopOf(NodeId id) const {
  auto a = Ancestors(id);
  return a.empty() ? id : a.back();
}

std::vector<NodeId> Sketch::Subtree(NodeId id) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack = {id};
  std::set<NodeId> seen;
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (!nodes_.contains(cur) || !seen.insert(cur).second) continue;
    out.push_back(cur);
    const SketchNode& n = node(cur);
    // Push in reverse so the pre-order follows slot order.
    std::vector<NodeId> kids;
    for (const SlotRule* rule : SlotsOf(n.kind)) {
      for (NodeId c : n.slot(rule->slot)) kids.push_back(c);
    }
    for (const auto& [slot, children] : n.slots) {
      if (FindSlotRule(n.kind, slot) != nullptr) continue;
      for (NodeId c : children) kids.push_back(c);
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::optional<Violation> Sketch::Attach(NodeId parent, std::string_view slot,
                                        NodeId child,
                                        std::optional<std::size_t> position) {
  if (!contains(parent) || !contains(child)) {
    return Make(ViolationCode::kUnknownNode, contains(parent) ? child : parent,
                "attach references a missing node");
  }
  const SketchNode& c = node(child);
  if (c.parent || child == root_) {
    return Make(ViolationCode::kAlreadyAttached, child,
                Where(c) + " is already attached");
  }
  if (child == parent || IsAncestor(child, parent)) {
    return Make(ViolationCode::kCycle, child,
                Where(c) + " is an ancestor of " + Where(node(parent)));
  }
  const SketchNode& p = node(parent);
  const SlotRule* rule = FindSlotRule(p.kind, slot);
  if (rule == nullptr || !rule->Allows(c.kind)) {
    return Make(ViolationCode::kSlotViolation, child,
                std::string(NodeKindName(p.kind)) + "." + std::string(slot) +
                    " cannot hold " + std::string(NodeKindName(c.kind)));
  }
  const std::vector<NodeId>& existing = p.slot(slot);
  if (existing.size() >= rule->max) {
    return Make(ViolationCode::kArity, parent,
                Where(p) + "." + std::string(slot) + " is full");
  }
  const std::size_t pos = position.value_or(existing.size());
  if (pos > existing.size()) {
    return Make(ViolationCode::kArity, parent,
                "position " + std::to_string(pos) + " out of range");
  }

  SketchNode& pm = mut(parent);
  auto& list = pm.slots[std::string(slot)];
  list.insert(list.begin() + static_cast<std::ptrdiff_t>(pos), child);
  SketchNode& cm = mut(child);
  cm.parent = parent;
  cm.parent_slot = std::string(slot);

  std::vector<Violation> found;
  CheckNode(*this, parent, found);
  for (NodeId id : Subtree(child)) CheckNode(*this, id, found);
  if (!found.empty()) {
    auto& l = mut(parent).slots[std::string(slot)];
    l.erase(l.begin() + static_cast<std::ptrdiff_t>(pos));
    SketchNode& undo = mut(child);
    undo.parent.reset();
    undo.parent_slot.clear();
    return found.front();
  }
  return std::nullopt;
}

std::optional<Violation> Sketch::Detach(NodeId child) {
  if (!contains(child)) {
    return Make(ViolationCode::kUnknownNode, child, "no such node");
  }
  const SketchNode& c = node(child);
  if (!c.parent) {
    return Make(ViolationCode::kNotAttached, child, Where(c) + " is detached");
  }
  const SketchNode& p = node(*c.parent);
  const SlotRule* rule = FindSlotRule(p.kind, c.parent_slot);
  const auto& list = p.slot(c.parent_slot);
  if (rule != nullptr && list.size() <= rule->min) {
    return Make(ViolationCode::kArity, p.id,
                Where(p) + "." + c.parent_slot + " would drop below " +
                    std::to_string(rule->min));
  }
  auto& l = mut(*c.parent).slots[c.parent_slot];
  l.erase(std::find(l.begin(), l.end(), child));
  SketchNode& cm = mut(child);
  cm.parent.reset();
  cm.parent_slot.clear();
  return std::nullopt;
}

void Sketch::Erase(NodeId id) {
  if (!contains(id)) return;
  if (node(id).parent || id == root_) {
    throw std::logic_error("Erase needs a detached subtree");
  }
  for (NodeId n : Subtree(id)) nodes_.erase(n);
}

NodeId Sketch::Instantiate(const Fragment& f) {
  const NodeId id = next_id_++;
  nodes_[id] = SketchNode{id, f.kind, {}, {}, {}, ""};
  for (const auto& [k, v] : f.props) {
    if (!v.empty()) mut(id).props[k] = v;
  }
  for (const SlotRule* rule : SlotsOf(f.kind)) {
    mut(id).slots[std::string(rule->slot)];
  }
  for (const auto& [slot, children] : f.slots) {
    for (const Fragment& child : children) {
      NodeId c = Instantiate(child);
      SketchNode& cm = mut(c);
      cm.parent = id;
      cm.parent_slot = slot;
      mut(id).slots[slot].push_back(c);
    }
  }
  return id;
}

Fragment Sketch::Extract(NodeId id) const {
  const SketchNode& n = node(id);
  Fragment f;
  f.kind = n.kind;
  for (const auto& [k, v] : n.props) {
    if (!v.empty()) f.props[k] = v;
  }
  for (const auto& [slot, children] : n.slots) {
    if (children.empty()) continue;
    auto& out = f.slots[slot];
    for (NodeId c : children) out.push_back(Extract(c));
  }
  return f;
}

bool Sketch::StructurallyEqual(const Sketch& other) const {
  return Extract() == other.Extract();
}

std::vector<Violation> ValidateTree(const Sketch& sketch, NodeId top) {
  std::vector<Violation> out;
  for (NodeId id : sketch.Subtree(top)) CheckNode(sketch, id, out);
  return out;
}

std::vector<Violation> Validate(const Sketch& sketch) {
  std::vector<Violation> out;
  if (!sketch.contains(sketch.root())) {
    out.push_back(Make(ViolationCode::kBadRoot, sketch.root(),
                       "root node is missing"));
    return out;
  }
  const SketchNode& root = sketch.node(sketch.root());
  if (root.kind != NodeKind::kModule || root.parent) {
    out.push_back(Make(ViolationCode::kBadRoot, root.id,
                       "root must be a detached Module"));
  }
  const std::size_t n = sketch.nodes().size();
  for (const auto& [id, node] : sketch.nodes()) {
    if (node.id != id) {
      out.push_back(Make(ViolationCode::kBrokenLink, id, "id mismatch"));
    }
    if (node.parent) {
      if (!sketch.contains(*node.parent)) {
        out.push_back(Make(ViolationCode::kBrokenLink, id,
                           "parent " + std::to_string(*node.parent) +
                               " is missing"));
        continue;
      }
      const auto& siblings = sketch.node(*node.parent).slot(node.parent_slot);
      if (std::count(siblings.begin(), siblings.end(), id) != 1) {
        out.push_back(Make(ViolationCode::kBrokenLink, id,
                           "parent does not list the node exactly once"));
      }
    }
    // Parent chains longer than the node count loop.
    std::optional<NodeId> cur = node.parent;
    std::size_t steps = 0;
    while (cur && sketch.contains(*cur) && steps <= n) {
      cur = sketch.node(*cur).parent;
      ++steps;
    }
    if (steps > n) {
      out.push_back(Make(ViolationCode::kCycle, id,
                         "node " + std::to_string(id) + " is on a cycle"));
    }
  }
  if (!out.empty()) return out;
  auto tree = ValidateTree(sketch, sketch.root());
  out.insert(out.end(), tree.begin(), tree.end());
  return out;
}

}  // namespace langsketch::sketch

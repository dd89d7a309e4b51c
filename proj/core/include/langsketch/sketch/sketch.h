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

#ifndef LANGSKETCH_SKETCH_SKETCH_H_
#define LANGSKETCH_SKETCH_SKETCH_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langsketch/sketch/node.h"

namespace langsketch::sketch {

enum class ViolationCode : std::uint8_t {
  kSlotViolation,
  kArity,
  kCycle,
  kMissingName,
  kInvalidIdentifier,
  kInvalidProp,
  kMissingLabel,
  kRedundantSelf,
  kDuplicateParam,
  kDuplicateKeyword,
  kArgOrder,
  kReturnOutsideFunction,
  kUnknownNode,
  kAlreadyAttached,
  kNotAttached,
  kBrokenLink,
  kBadRoot,
};

std::string_view ViolationCodeName(ViolationCode code);

struct Violation {
  ViolationCode code;
  NodeId node = 0;
  std::string detail;

  std::string ToString() const;
  bool operator==(const Violation&) const = default;
};

// The sketch AST. A value type: copy it to get a hypothetical sketch.
class Sketch {
 public:
  // A bare Module.
  Sketch();

  // Builds a sketch from a raw node table without any checking. Meant for
  // loading and for tests that need invalid sketches.
  static Sketch FromNodes(NodeId root, std::map<NodeId, SketchNode> nodes,
                          NodeId next_id);

  NodeId root() const { return root_; }
  NodeId next_id() const { return next_id_; }
  const std::map<NodeId, SketchNode>& nodes() const { return nodes_; }
  bool contains(NodeId id) const { return nodes_.contains(id); }
  const SketchNode& node(NodeId id) const;

  // Allocates a detached node. FunctionDef gets empty Params and Body,
  // ClassDef an empty Body, Call an empty ArgList. Throws
  // std::invalid_argument for a prop name the kind does not have.
  NodeId NewNode(NodeKind kind, Props props = {});

  // Attaches a detached child. On any violation the sketch is left
  // unchanged and the violation is returned.
  std::optional<Violation> Attach(NodeId parent, std::string_view slot,
                                  NodeId child,
                                  std::optional<std::size_t> position = {});

  // Detaches a child from its parent; the subtree stays allocated.
  std::optional<Violation> Detach(NodeId child);

  // Sets (or, with an empty value, clears) a prop. Only checks that the
  // kind has the prop; run ValidateTree for the rest.
  std::optional<Violation> SetProp(NodeId id, std::string_view prop,
                                   std::string value);

  // Removes a detached subtree from the node table.
  void Erase(NodeId id);

  // Allocates fresh ids for the fragment, returning the detached root.
  NodeId Instantiate(const Fragment& fragment);

  Fragment Extract(NodeId id) const;
  Fragment Extract() const { return Extract(root_); }

  // Same tree shape, kinds and props from the root, ignoring ids.
  bool StructurallyEqual(const Sketch& other) const;

  // Ancestors of the node, nearest first.
  std::vector<NodeId> Ancestors(NodeId id) const;
  bool IsAncestor(NodeId ancestor, NodeId id) const;
  // Root of the tree containing the node (the sketch root when attached).
  NodeId TopOf(NodeId id) const;
  // Node ids of the subtree in pre-order.
  std::vector<NodeId> Subtree(NodeId id) const;

 private:
  SketchNode& mut(NodeId id);

  NodeId root_ = 0;
  NodeId next_id_ = 0;
  std::map<NodeId, SketchNode> nodes_;
};

// Every violation in the sketch. Empty means valid.
std::vector<Violation> Validate(const Sketch& sketch);
// Violations within the tree hanging from `top` only.
std::vector<Violation> ValidateTree(const Sketch& sketch, NodeId top);

}  // namespace langsketch::sketch

#endif  // LANGSKETCH_SKETCH_SKETCH_H_

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

#include "langsketch/assembly/assembler.h"

#include <algorithm>
#include <cctype>

#include "langsketch/sketch/render.h"

namespace langsketch::assembly {
namespace {

using mapping::Candidate;
using mapping::ElementKind;
using sketch::Fragment;
using sketch::NodeId;
using sketch::NodeKind;
using sketch::Violation;
using sketch::ViolationCode;

enum class Category : std::uint8_t { kStatement, kArgument, kParameter };

struct Materialized {
  Fragment fragment;
  std::vector<std::pair<std::string, std::size_t>> focus;
};

Violation Reject(NodeId node, std::string detail) {
  return Violation{ViolationCode::kSlotViolation, node, std::move(detail)};
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Hole labels may not carry commas, control characters or edge spaces.
std::string CleanLabel(std::string_view text, std::string_view fallback) {
  std::string out;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    out += (c == ',' || u < 0x20 || u == 0x7f) ? ' ' : c;
  }
  const auto first = out.find_first_not_of(' ');
  if (first == std::string::npos) return std::string(fallback);
  const auto last = out.find_last_not_of(' ');
  return out.substr(first, last - first + 1);
}

std::optional<Materialized> AsExpression(Fragment expr, Category category) {
  switch (category) {
    case Category::kStatement:
      return Materialized{sketch::build::ExprStmt(std::move(expr)),
                          {{"value", 0}}};
    case Category::kArgument:
      return Materialized{sketch::build::Arg(std::move(expr)), {{"value", 0}}};
    case Category::kParameter:
      return std::nullopt;
  }
  return std::nullopt;
}

Fragment CallOf(const std::string& name, const std::string& first_arg) {
  std::vector<Fragment> args;
  if (!first_arg.empty()) {
    args.push_back(sketch::build::Arg(sketch::build::Name(first_arg)));
  }
  return sketch::build::Call(sketch::build::Name(name), std::move(args));
}

std::variant<Materialized, Violation> Materialize(
    const Candidate& candidate, Category category,
    const catalog::SnippetCatalog& catalog, const std::string& first_arg) {
  const auto wrong_place = [&] {
    return Reject(0, std::string(mapping::ElementKindName(candidate.kind)) +
                         " element cannot go here");
  };
  std::optional<Materialized> out;
  if (const auto* ref = std::get_if<mapping::SnippetRef>(&candidate.payload)) {
    const catalog::Snippet* snippet = catalog.Find(ref->name);
    if (snippet == nullptr) return Reject(0, "unknown snippet " + ref->name);
    const Fragment& f = snippet->fragment;
    if (snippet->kind == catalog::SnippetKind::kExpression) {
      out = AsExpression(f, category);
    } else if (category == Category::kStatement) {
      out = Materialized{f, {}};
      if (f.kind == NodeKind::kExprStmt) out->focus = {{"value", 0}};
    }
  } else if (const auto* id =
                 std::get_if<mapping::IdentifierRef>(&candidate.payload)) {
    out = AsExpression(id->kind == sketch::IdentifierKind::kFunction
                           ? CallOf(id->name, first_arg)
                           : sketch::build::Name(id->name),
                       category);
  } else if (const auto* spec =
                 std::get_if<mapping::InferredSpec>(&candidate.payload)) {
    const std::string label = CleanLabel(spec->label, spec->identifier);
    switch (spec->kind) {
      case ElementKind::kClass:
        if (category == Category::kStatement) {
          out = Materialized{sketch::build::ClassDef(spec->identifier), {}};
        }
        break;
      case ElementKind::kFunction:
        if (category == Category::kStatement) {
          out = Materialized{sketch::build::FunctionDef(spec->identifier), {}};
        }
        break;
      case ElementKind::kParameter:
        if (category == Category::kParameter) {
          out = Materialized{sketch::build::Param(spec->identifier), {}};
        }
        break;
      case ElementKind::kVariable:
        if (category == Category::kStatement) {
          out = Materialized{
              sketch::build::Assign(sketch::build::Name(spec->identifier),
                                    sketch::build::Hole(label)),
              {}};
        } else {
          out = AsExpression(sketch::build::Name(spec->identifier), category);
        }
        break;
      case ElementKind::kValue:
        out = AsExpression(sketch::build::Name(spec->identifier), category);
        break;
      case ElementKind::kCall:
        out = AsExpression(CallOf(spec->identifier, first_arg), category);
        break;
      default:
        break;
    }
  }
  if (!out) return wrong_place();
  return std::move(*out);
}

bool IsDefinition(NodeKind kind) {
  return kind == NodeKind::kClassDef || kind == NodeKind::kFunctionDef;
}

// Name a later call can pass along for the anchor element.
std::string AnchorName(const sketch::Sketch& sk, NodeId id) {
  const sketch::SketchNode& n = sk.node(id);
  switch (n.kind) {
    case NodeKind::kName:
    case NodeKind::kParam:
    case NodeKind::kClassDef:
    case NodeKind::kFunctionDef:
      return n.prop("name");
    case NodeKind::kAssign: {
      const auto& target = n.slot("target");
      if (!target.empty() && sk.node(target[0]).kind == NodeKind::kName) {
        return sk.node(target[0]).prop("name");
      }
      return "";
    }
    case NodeKind::kArg: {
      const auto& value = n.slot("value");
      if (!value.empty()) return AnchorName(sk, value[0]);
      return "";
    }
    default:
      return "";
  }
}

std::string CandidateIdentifier(const Candidate& c) {
  if (const auto* spec = std::get_if<mapping::InferredSpec>(&c.payload)) {
    return spec->identifier;
  }
  if (const auto* id = std::get_if<mapping::IdentifierRef>(&c.payload)) {
    return id->name;
  }
  return "";
}

bool Walk(const nlp::AnalysisState& analysis,
          const std::vector<PathStep>& path, std::size_t step,
          std::size_t token, std::size_t target) {
  if (step == path.size()) return token == target;
  const PathStep& s = path[step];
  if (s.optional && Walk(analysis, path, step + 1, token, target)) return true;
  if (!s.lexical.empty() &&
      !s.lexical.contains(Lower(analysis.tokens[token].text))) {
    return false;
  }
  if (!s.pos.empty() && !s.pos.contains(analysis.tags[token])) return false;
  const nlp::DependencyTree& tree = analysis.tree;
  if (s.dir == Direction::kTowardHead) {
    const std::int32_t head = tree.head_of(token);
    if (head == nlp::kRootHead || !s.labels.contains(tree.label_of(token))) {
      return false;
    }
    const auto next = static_cast<std::size_t>(head);
    return Walk(analysis, path, step + 1, next, target);
  }
  for (std::int32_t child : tree.children_of(static_cast<std::int32_t>(token))) {
    const auto c = static_cast<std::size_t>(child);
    if (s.labels.contains(tree.label_of(c)) &&
        Walk(analysis, path, step + 1, c, target)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool PathMatches(const nlp::AnalysisState& analysis,
                 const std::vector<PathStep>& path, std::size_t from,
                 std::size_t to) {
  if (from >= analysis.tree.size() || to >= analysis.tree.size()) return false;
  return Walk(analysis, path, 0, from, to);
}

std::vector<RuleMatch> MatchRules(const Candidate& candidate,
                                  const nlp::Phrase& phrase,
                                  const AssemblyContext& context) {
  struct Anchor {
    const mapping::Association* association;
    std::size_t head;
  };
  std::vector<Anchor> anchors;
  for (const mapping::Association& a : context.associations) {
    if (a.end > phrase.start) continue;
    if (auto head = mapping::HeadToken(a, *context.analysis)) {
      anchors.push_back({&a, *head});
    }
  }
  std::stable_sort(anchors.begin(), anchors.end(),
                   [](const Anchor& x, const Anchor& y) {
                     if (x.head != y.head) return x.head > y.head;
                     return x.association->seq > y.association->seq;
                   });
  std::vector<RuleMatch> out;
  for (const Anchor& anchor : anchors) {
    for (const AssemblyRule& rule : context.rules->rules()) {
      if (rule.pattern.path.empty()) continue;
      if (!rule.pattern.incoming_kinds.contains(candidate.kind) ||
          !rule.pattern.anchor_kinds.contains(anchor.association->kind)) {
        continue;
      }
      if (PathMatches(*context.analysis, rule.pattern.path, phrase.head_token,
                      anchor.head)) {
        out.push_back({&rule, anchor.association});
      }
    }
  }
  for (const AssemblyRule& rule : context.rules->rules()) {
    if (rule.pattern.path.empty() &&
        rule.pattern.incoming_kinds.contains(candidate.kind)) {
      out.push_back({&rule, nullptr});
    }
  }
  return out;
}

std::variant<Edit, Violation> BuildEdit(const AssemblyRule& rule,
                                        const mapping::Association* anchor,
                                        const Candidate& candidate,
                                        const sketch::Sketch& sk,
                                        const catalog::SnippetCatalog& catalog) {
  if (rule.action != AssemblyAction::kAttachAtModule) {
    if (anchor == nullptr) return Reject(0, "rule " + rule.id + " needs an anchor");
    if (!sk.contains(anchor->node) || !sk.contains(anchor->root)) {
      return Violation{ViolationCode::kUnknownNode, anchor->node,
                       "anchor element is gone"};
    }
  }
  Edit edit;
  edit.type = Edit::Type::kInsert;
  Category category = Category::kStatement;
  std::optional<std::size_t> position;
  switch (rule.action) {
    case AssemblyAction::kAttachAtModule:
      edit.parent = sk.root();
      edit.slot = "body";
      break;
    case AssemblyAction::kInsertIntoBody: {
      const sketch::SketchNode& n = sk.node(anchor->node);
      if (!IsDefinition(n.kind)) {
        return Reject(n.id, "anchor is not a class or function");
      }
      if (candidate.kind == ElementKind::kParameter) {
        if (n.kind != NodeKind::kFunctionDef) {
          return Reject(n.id, "parameters need a function anchor");
        }
        edit.parent = n.slot("params").at(0);
        edit.slot = "items";
        category = Category::kParameter;
      } else {
        edit.parent = n.slot("body").at(0);
        edit.slot = "stmts";
      }
      break;
    }
    case AssemblyAction::kAppendStatementInBody: {
      const sketch::SketchNode& n = sk.node(anchor->node);
      if (IsDefinition(n.kind)) {
        edit.parent = n.slot("body").at(0);
        edit.slot = "stmts";
      } else {
        const sketch::SketchNode& root = sk.node(anchor->root);
        if (!root.parent) return Reject(root.id, "anchor is detached");
        const NodeKind pk = sk.node(*root.parent).kind;
        if (pk != NodeKind::kModule && pk != NodeKind::kBody) {
          return Reject(root.id, "anchor is not a statement");
        }
        edit.parent = *root.parent;
        edit.slot = root.parent_slot;
      }
      break;
    }
    case AssemblyAction::kAppendArgument: {
      const sketch::SketchNode& n = sk.node(anchor->node);
      if (n.kind != NodeKind::kCall) return Reject(n.id, "anchor is not a call");
      edit.parent = n.slot("args").at(0);
      edit.slot = "items";
      category = Category::kArgument;
      break;
    }
    case AssemblyAction::kAppendSibling: {
      const sketch::SketchNode& root = sk.node(anchor->root);
      if (!root.parent) return Reject(root.id, "anchor is detached");
      const sketch::SketchNode& parent = sk.node(*root.parent);
      const auto& siblings = parent.slot(root.parent_slot);
      edit.parent = parent.id;
      edit.slot = root.parent_slot;
      position = static_cast<std::size_t>(
                     std::find(siblings.begin(), siblings.end(), root.id) -
                     siblings.begin()) +
                 1;
      switch (parent.kind) {
        case NodeKind::kModule:
        case NodeKind::kBody:
          break;
        case NodeKind::kArgList:
          category = Category::kArgument;
          break;
        case NodeKind::kParams:
          category = Category::kParameter;
          break;
        default:
          return Reject(parent.id, "anchor has no sibling list");
      }
      break;
    }
    case AssemblyAction::kBindAsArgumentName: {
      const sketch::SketchNode& root = sk.node(anchor->root);
      if (root.kind != NodeKind::kArg) return Reject(root.id, "anchor is not an argument");
      std::string name = CandidateIdentifier(candidate);
      if (name.empty()) return Reject(root.id, "candidate has no identifier");
      edit.type = Edit::Type::kSetProp;
      edit.node = root.id;
      edit.prop = "name";
      edit.value = std::move(name);
      return edit;
    }
  }
  const std::string first_arg =
      rule.anchor_as_first_arg ? AnchorName(sk, anchor->node) : "";
  if (rule.anchor_as_first_arg && first_arg.empty()) {
    return Reject(anchor->node, "anchor has no name to pass");
  }
  auto made = Materialize(candidate, category, catalog, first_arg);
  if (auto* v = std::get_if<Violation>(&made)) {
    v->node = edit.parent;
    return *v;
  }
  auto& m = std::get<Materialized>(made);
  edit.fragment = std::move(m.fragment);
  edit.focus_path = std::move(m.focus);
  edit.position = position.value_or(sk.node(edit.parent).slot(edit.slot).size());
  return edit;
}

std::optional<Violation> ApplyEdit(sketch::Sketch& sk, const Edit& edit,
                                   Applied* applied) {
  switch (edit.type) {
    case Edit::Type::kNone:
      return std::nullopt;
    case Edit::Type::kSetProp: {
      if (!sk.contains(edit.node)) {
        return Violation{ViolationCode::kUnknownNode, edit.node, "no such node"};
      }
      sketch::Sketch trial = sk;
      if (auto v = trial.SetProp(edit.node, edit.prop, edit.value)) return v;
      if (auto v = sketch::ValidateTree(trial, trial.TopOf(edit.node)); !v.empty()) {
        return v.front();
      }
      sk = std::move(trial);
      if (applied) *applied = Applied{edit.node, edit.node};
      return std::nullopt;
    }
    case Edit::Type::kInsert:
      break;
  }
  if (!sk.contains(edit.parent)) {
    return Violation{ViolationCode::kUnknownNode, edit.parent, "no such parent"};
  }
  const NodeId root = sk.Instantiate(edit.fragment);
  if (auto v = sk.Attach(edit.parent, edit.slot, root, edit.position)) {
    sk.Erase(root);
    return v;
  }
  NodeId focus = root;
  for (const auto& [slot, index] : edit.focus_path) {
    focus = sk.node(focus).slot(slot).at(index);
  }
  if (applied) *applied = Applied{root, focus};
  return std::nullopt;
}

std::variant<Proposal, Violation> Apply(const RuleMatch& match,
                                        const Candidate& candidate,
                                        const AssemblyContext& context) {
  auto built = BuildEdit(*match.rule, match.anchor, candidate, *context.sketch,
                         *context.catalog);
  if (auto* v = std::get_if<Violation>(&built)) return *v;
  Edit& edit = std::get<Edit>(built);
  sketch::Sketch trial = *context.sketch;
  if (auto v = ApplyEdit(trial, edit, nullptr)) return *v;
  if (auto violations = sketch::Validate(trial); !violations.empty()) {
    return violations.front();
  }
  Proposal p;
  p.rule_id = match.rule->id;
  if (match.anchor) p.anchor_seq = match.anchor->seq;
  p.candidate = candidate;
  p.edit = std::move(edit);
  p.preview = sketch::Render(trial);
  return p;
}

std::vector<Proposal> Propose(const Candidate& candidate,
                              const nlp::Phrase& phrase,
                              const AssemblyContext& context) {
  std::vector<Proposal> out;
  if (const auto* ref = std::get_if<mapping::ReferentRef>(&candidate.payload)) {
    for (const mapping::Association& a : context.associations) {
      if (a.seq != ref->event_seq) continue;
      Proposal p;
      p.rule_id = std::string(kRebindRule);
      p.anchor_seq = a.seq;
      p.candidate = candidate;
      p.preview = sketch::Render(*context.sketch);
      out.push_back(std::move(p));
      break;
    }
    return out;
  }
  bool anchored = false;
  for (const RuleMatch& m : MatchRules(candidate, phrase, context)) {
    if (m.anchor == nullptr && anchored) break;
    auto result = Apply(m, candidate, context);
    if (auto* p = std::get_if<Proposal>(&result)) {
      anchored = anchored || m.anchor != nullptr;
      out.push_back(std::move(*p));
    }
  }
  return out;
}

}  // namespace langsketch::assembly

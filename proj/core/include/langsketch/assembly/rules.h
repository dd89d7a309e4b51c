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

#ifndef LANGSKETCH_ASSEMBLY_RULES_H_
#define LANGSKETCH_ASSEMBLY_RULES_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "langsketch/mapping/candidate.h"
#include "langsketch/nlp/types.h"

namespace langsketch::assembly {

enum class Direction : std::uint8_t { kTowardHead, kTowardDependent };

// One arc traversal. `lexical` (lowercase words) and `pos` constrain the
// token the step leaves from, so a prep step can name its preposition.
struct PathStep {
  Direction dir = Direction::kTowardHead;
  std::set<nlp::DepLabel> labels;
  std::set<std::string> lexical;
  std::set<nlp::PosTag> pos;
  bool optional = false;

  bool operator==(const PathStep&) const = default;
};

// Path from the incoming phrase head to the anchor phrase head.
struct RulePattern {
  std::vector<PathStep> path;
  std::set<mapping::ElementKind> anchor_kinds;
  std::set<mapping::ElementKind> incoming_kinds;

  bool operator==(const RulePattern&) const = default;
};

enum class AssemblyAction : std::uint8_t {
  kInsertIntoBody,
  kAppendArgument,
  kAppendStatementInBody,
  kAppendSibling,
  kBindAsArgumentName,
  kAttachAtModule,
};

std::string_view AssemblyActionName(AssemblyAction action);
std::optional<AssemblyAction> ParseAssemblyAction(std::string_view name);

struct AssemblyRule {
  std::string id;
  int priority = 0;
  RulePattern pattern;
  AssemblyAction action = AssemblyAction::kAttachAtModule;
  // Call elements get the anchor's name as their first argument.
  bool anchor_as_first_arg = false;

  bool operator==(const AssemblyRule&) const = default;
};

// Rules sorted by (priority, id).
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<AssemblyRule> rules);

  const std::vector<AssemblyRule>& rules() const { return rules_; }
  const AssemblyRule* Find(std::string_view id) const;
  bool operator==(const RuleSet&) const = default;

 private:
  std::vector<AssemblyRule> rules_;
};

// Array of {id, priority, path: [{dir, labels, lexical?, pos?, optional?}],
// anchor_kinds, incoming_kinds, action, anchor_as_first_arg?}. Only an
// AttachAtModule rule may have an empty path. Throws RuleError.
RuleSet LoadRules(const nlohmann::json& document);
RuleSet LoadRulesText(std::string_view text);
RuleSet LoadRulesFile(const std::string& path);
const RuleSet& DefaultRules();

nlohmann::json SerializeRules(const RuleSet& rules);

}  // namespace langsketch::assembly

#endif  // LANGSKETCH_ASSEMBLY_RULES_H_

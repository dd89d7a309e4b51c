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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "langsketch/assembly/assembler.h"
#include "langsketch/assembly/rules.h"
#include "langsketch/errors.h"
#include "langsketch/mapping/matcher.h"
#include "langsketch/nlp/analysis.h"
#include "langsketch/session/session.h"
#include "langsketch/sketch/render.h"
#include "support/python_oracle.h"

namespace langsketch::assembly {
namespace {

using nlohmann::json;

json MinimalRule(std::string id) {
  return {{"id", id},
          {"priority", 1},
          {"path", {{{"dir", "toward-head"}, {"labels", {"dobj"}}}}},
          {"anchor_kinds", {"call"}},
          {"incoming_kinds", {"variable"}},
          {"action", "AppendArgument"}};
}

TEST(RulesTest, DefaultRulesLoadSortedAndRoundTrip) {
  const RuleSet& rules = DefaultRules();
  ASSERT_EQ(rules.rules().size(), 8u);
  EXPECT_EQ(rules.rules().front().id, "R1");
  EXPECT_EQ(rules.rules().back().id, "R0");
  EXPECT_EQ(LoadRules(SerializeRules(rules)), rules);
}

TEST(RulesTest, BadRulesAreRejected) {
  EXPECT_NO_THROW(LoadRules(json::array({MinimalRule("a")})));
  json bad = MinimalRule("a");
  bad["path"][0]["labels"] = {"nmod"};
  EXPECT_THROW(LoadRules(json::array({bad})), RuleError);
  bad = MinimalRule("a");
  bad["action"] = "Teleport";
  EXPECT_THROW(LoadRules(json::array({bad})), RuleError);
  bad = MinimalRule("a");
  bad["path"][0]["labels"] = json::array();
  EXPECT_THROW(LoadRules(json::array({bad})), RuleError);
  bad = MinimalRule("a");
  bad["path"] = json::array();
  EXPECT_THROW(LoadRules(json::array({bad})), RuleError);
  bad = MinimalRule("a");
  bad["incoming_kinds"] = {"widget"};
  EXPECT_THROW(LoadRules(json::array({bad})), RuleError);
  EXPECT_THROW(LoadRules(json::array({MinimalRule("a"), MinimalRule("a")})),
               RuleError);
  EXPECT_THROW(LoadRulesText("{"), RuleError);
}

// Live session state for a prompt, after accepting the first suggestion at
// each listed prefix length.
struct Fixture {
  session::Session session{session::NewSessionId(),
                           session::DefaultSessionConfig(), ""};

  void TypeAndAccept(const std::string& text) {
    session.UpdatePrompt(text, text.size());
    ASSERT_FALSE(session.suggestions().empty()) << text;
    session.AcceptIndex(0);
  }
  void Type(const std::string& text) { session.UpdatePrompt(text, text.size()); }
  AssemblyContext Context() const {
    return AssemblyContext{&session.analysis(), session.associations(),
                           &session.sketch(), session.config().catalog.get(),
                           session.config().rules.get()};
  }
  std::vector<mapping::Candidate> Candidates() const {
    return mapping::Suggest(session.analysis(), *session.config().catalog,
                            &session.index(), session.associations());
  }
};

// Independent path check: every token sequence the steps allow.
bool BrutePath(const nlp::AnalysisState& a, const std::vector<PathStep>& path,
               std::size_t step, std::size_t token, std::size_t target) {
  if (step == path.size()) return token == target;
  const PathStep& s = path[step];
  bool ok = s.optional && BrutePath(a, path, step + 1, token, target);
  std::string lower = a.tokens[token].text;
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  const bool here = (s.lexical.empty() || s.lexical.contains(lower)) &&
                    (s.pos.empty() || s.pos.contains(a.tags[token]));
  for (std::size_t next = 0; next < a.tokens.size() && here; ++next) {
    bool arc = false;
    if (s.dir == Direction::kTowardHead) {
      arc = a.tree.head_of(token) == static_cast<std::int32_t>(next) &&
            s.labels.contains(a.tree.label_of(token));
    } else {
      arc = a.tree.head_of(next) == static_cast<std::int32_t>(token) &&
            s.labels.contains(a.tree.label_of(next));
    }
    ok = ok || (arc && BrutePath(a, path, step + 1, next, target));
  }
  return ok;
}

TEST(MatchRulesTest, NoAssociationsOnlyFallback) {
  Fixture f;
  f.Type("Define a PyTorch dataset");
  auto candidates = f.Candidates();
  ASSERT_FALSE(candidates.empty());
  auto matches =
      MatchRules(candidates[0], *f.session.analysis().current(), f.Context());
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].rule->id, "R0");
  EXPECT_EQ(matches[0].anchor, nullptr);
}

TEST(ProposeTest, TeaserLoaderFunctionHasExactlyOneProposal) {
  Fixture f;
  f.TypeAndAccept("Define a PyTorch dataset");
  f.Type("Define a PyTorch dataset with a loader function");
  auto candidates = f.Candidates();
  ASSERT_FALSE(candidates.empty());
  const mapping::Candidate& loader = candidates[0];
  ASSERT_EQ(loader.key(), "inferred:function:loader");
  const nlp::AnalysisState& a = f.session.analysis();
  const nlp::Phrase& phrase = *a.current();

  // Every (rule, anchor) pair, with the path checked by brute force.
  std::set<std::string> valid;
  for (const AssemblyRule& rule : DefaultRules().rules()) {
    std::vector<const mapping::Association*> anchors = {nullptr};
    for (const auto& assoc : f.session.associations()) anchors.push_back(&assoc);
    for (const mapping::Association* anchor : anchors) {
      if ((anchor == nullptr) != rule.pattern.path.empty()) continue;
      if (!rule.pattern.incoming_kinds.contains(loader.kind)) continue;
      if (anchor != nullptr) {
        if (!rule.pattern.anchor_kinds.contains(anchor->kind)) continue;
        auto head = mapping::HeadToken(*anchor, a);
        if (!head || !BrutePath(a, rule.pattern.path, 0, phrase.head_token, *head)) {
          continue;
        }
      }
      auto result = Apply(RuleMatch{&rule, anchor}, loader, f.Context());
      if (std::holds_alternative<Proposal>(result) && anchor != nullptr) {
        valid.insert(rule.id);
      }
    }
  }
  EXPECT_EQ(valid, std::set<std::string>{"R1"});
  auto proposals = Propose(loader, phrase, f.Context());
  ASSERT_EQ(proposals.size(), 1u);
  EXPECT_EQ(proposals[0].rule_id, "R1");
  EXPECT_NE(proposals[0].preview.find("    def loader(self):"),
            std::string::npos);
}

TEST(ProposeTest, FullArgListIsRejected) {
  Fixture f;
  f.TypeAndAccept("Define a function that reads");
  std::string text = "Define a function that reads";
  for (int i = 0; i < 8; ++i) {
    text += i == 0 ? " a" : " and b";
    text += std::to_string(i);
    f.TypeAndAccept(text);
  }
  f.Type(text + " and c9");
  const nlp::AnalysisState& a = f.session.analysis();
  auto candidates = f.Candidates();
  ASSERT_FALSE(candidates.empty());
  const AssemblyRule* r3 = DefaultRules().Find("R3");
  const mapping::Association* reads = nullptr;
  for (const auto& assoc : f.session.associations()) {
    if (assoc.text == "reads") reads = &assoc;
  }
  ASSERT_NE(reads, nullptr);
  auto result = Apply(RuleMatch{r3, reads}, candidates[0], f.Context());
  ASSERT_TRUE(std::holds_alternative<sketch::Violation>(result));
  EXPECT_EQ(std::get<sketch::Violation>(result).code,
            sketch::ViolationCode::kArity);
  for (const Proposal& p : Propose(candidates[0], *a.current(), f.Context())) {
    EXPECT_NE(p.rule_id, "R3");
  }
}

TEST(ProposeTest, CorefRebindsWithoutInsertion) {
  Fixture f;
  f.TypeAndAccept("Define a loader function");
  f.Type("Define a loader function. It");
  auto candidates = f.Candidates();
  ASSERT_FALSE(candidates.empty());
  ASSERT_EQ(candidates[0].source, mapping::CandidateSource::kCoref);
  auto proposals =
      Propose(candidates[0], *f.session.analysis().current(), f.Context());
  ASSERT_EQ(proposals.size(), 1u);
  EXPECT_EQ(proposals[0].rule_id, kRebindRule);
  EXPECT_EQ(proposals[0].edit.type, Edit::Type::kNone);
  EXPECT_EQ(proposals[0].preview, sketch::Render(f.session.sketch()));
}

TEST(ProposeTest, ApplyThenRevertRestoresSketch) {
  Fixture f;
  f.TypeAndAccept("Define a PyTorch dataset");
  f.Type("Define a PyTorch dataset with a loader function");
  auto candidates = f.Candidates();
  auto proposals = Propose(candidates[0], *f.session.analysis().current(),
                           f.Context());
  ASSERT_FALSE(proposals.empty());
  sketch::Sketch sk = f.session.sketch();
  Applied applied;
  ASSERT_FALSE(ApplyEdit(sk, proposals[0].edit, &applied).has_value());
  EXPECT_EQ(sketch::Render(sk), proposals[0].preview);
  ASSERT_FALSE(sk.Detach(applied.root).has_value());
  sk.Erase(applied.root);
  EXPECT_TRUE(sk.StructurallyEqual(f.session.sketch()));
}

// Proposals over a spread of prompts: valid, compilable, deterministic and
// in reverse reading order of their anchors.
TEST(ProposeTest, ProposalInvariants) {
  const std::vector<std::vector<std::string>> flows = {
      {"Define a PyTorch dataset", " with a loader function", " that reads",
       " JSON", " and CSV"},
      {"Create a Flask app", ". The app", " should listen"},
      {"Define a function that loads data", " from the file"},
      {"Write a model class", " with a train method", " that sorts",
       " the batches"},
      {"Define a loader function", ". It", " reads", " images"},
  };
  std::vector<std::string> previews;
  for (const auto& flow : flows) {
    Fixture f;
    std::string text;
    for (const std::string& piece : flow) {
      text += piece;
      f.Type(text);
      const nlp::AnalysisState& a = f.session.analysis();
      if (a.current() == nullptr) continue;
      for (const mapping::Candidate& c : f.Candidates()) {
        auto first = Propose(c, *a.current(), f.Context());
        auto second = Propose(c, *a.current(), f.Context());
        ASSERT_EQ(first.size(), second.size());
        std::optional<std::size_t> last_anchor_pos;
        for (std::size_t i = 0; i < first.size(); ++i) {
          EXPECT_EQ(first[i].preview, second[i].preview);
          EXPECT_EQ(first[i].rule_id, second[i].rule_id);
          sketch::Sketch sk = f.session.sketch();
          ASSERT_FALSE(ApplyEdit(sk, first[i].edit, nullptr).has_value());
          EXPECT_TRUE(sketch::Validate(sk).empty());
          previews.push_back(first[i].preview);
          if (!first[i].anchor_seq || first[i].rule_id == kRebindRule) continue;
          for (const auto& assoc : f.session.associations()) {
            if (assoc.seq != *first[i].anchor_seq) continue;
            if (last_anchor_pos) EXPECT_LE(assoc.start, *last_anchor_pos);
            last_anchor_pos = assoc.start;
          }
        }
      }
      if (!f.session.suggestions().empty()) {
        f.session.AcceptIndex(0);
        text = f.session.prompt();
      }
    }
  }
  ASSERT_FALSE(previews.empty());
  auto verdicts = testing::CompileWithPython(previews);
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    EXPECT_FALSE(verdicts[i].has_value()) << previews[i] << *verdicts[i];
  }
}

}  // namespace
}  // namespace langsketch::assembly

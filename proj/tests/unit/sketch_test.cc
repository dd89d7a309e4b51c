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

#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "langsketch/sketch/identifiers.h"
#include "langsketch/sketch/render.h"
#include "langsketch/sketch/schema.h"
#include "langsketch/sketch/sketch.h"
#include "support/fixtures.h"
#include "support/python_oracle.h"
#include "support/random_sketch.h"

namespace langsketch::sketch {
namespace {

Sketch TeaserSketch() {
  Sketch s;
  auto cls = build::ClassDef(
      "PyTorchDataset", "Dataset",
      {build::FunctionDef("__init__", {}, {build::Hole("init")}),
       build::FunctionDef("__len__", {}, {build::Hole("length")}),
       build::FunctionDef("__getitem__", {"index"}, {build::Hole("item")}),
       build::FunctionDef(
           "loader", {},
           {build::ExprStmt(build::Call(build::Name("reads"),
                                        {build::Arg(build::Name("json"))}))})});
  EXPECT_EQ(s.Attach(s.root(), "body", s.Instantiate(cls)), std::nullopt);
  return s;
}

TEST(NewNodeTest, HoleIsDetached) {
  Sketch s;
  NodeId h = s.NewNode(NodeKind::kHole, {{"label", "json"}});
  EXPECT_FALSE(s.node(h).parent.has_value());
  EXPECT_EQ(s.node(h).prop("label"), "json");
}

TEST(NewNodeTest, FunctionDefGetsParamsAndBody) {
  Sketch s;
  NodeId f = s.NewNode(NodeKind::kFunctionDef, {{"name", "loader"}});
  ASSERT_EQ(s.node(f).slot("params").size(), 1u);
  ASSERT_EQ(s.node(f).slot("body").size(), 1u);
  EXPECT_EQ(s.node(s.node(f).slot("params")[0]).kind, NodeKind::kParams);
  EXPECT_EQ(s.node(s.node(f).slot("body")[0]).kind, NodeKind::kBody);
  EXPECT_TRUE(s.node(s.node(f).slot("body")[0]).slot("stmts").empty());
}

TEST(NewNodeTest, UnknownPropRejected) {
  Sketch s;
  EXPECT_THROW(s.NewNode(NodeKind::kPass, {{"name", "x"}}),
               std::invalid_argument);
}

TEST(AttachTest, FunctionIntoClassBody) {
  Sketch s;
  NodeId cls = s.NewNode(NodeKind::kClassDef, {{"name", "PyTorchDataset"}});
  ASSERT_EQ(s.Attach(s.root(), "body", cls), std::nullopt);
  NodeId fn = s.NewNode(NodeKind::kFunctionDef, {{"name", "loader"}});
  EXPECT_EQ(s.Attach(s.node(cls).slot("body")[0], "stmts", fn), std::nullopt);
  EXPECT_TRUE(Validate(s).empty());
}

TEST(AttachTest, ArgIntoModuleIsSlotViolation) {
  Sketch s;
  NodeId arg = s.NewNode(NodeKind::kArg);
  const Sketch before = s;
  auto v = s.Attach(s.root(), "body", arg);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->code, ViolationCode::kSlotViolation);
  EXPECT_TRUE(s.StructurallyEqual(before));
}

TEST(AttachTest, IntoOwnDescendantIsCycle) {
  Sketch s;
  NodeId fn = s.NewNode(NodeKind::kFunctionDef, {{"name", "f"}});
  NodeId body = s.node(fn).slot("body")[0];
  ASSERT_EQ(s.Attach(s.root(), "body", fn), std::nullopt);
  ASSERT_EQ(s.Detach(fn), std::nullopt);
  // body is a descendant of fn.
  NodeId inner = s.NewNode(NodeKind::kFunctionDef, {{"name", "g"}});
  ASSERT_EQ(s.Attach(body, "stmts", inner), std::nullopt);
  auto v = s.Attach(s.node(inner).slot("body")[0], "stmts", fn);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->code, ViolationCode::kCycle);
}

TEST(AttachTest, ArityLimitOnArgList) {
  Sketch s;
  NodeId call = s.NewNode(NodeKind::kCall);
  NodeId list = s.node(call).slot("args")[0];
  for (std::size_t i = 0; i < kMaxCallArity; ++i) {
    NodeId arg = s.Instantiate(build::Arg(build::Name("a")));
    ASSERT_EQ(s.Attach(list, "items", arg), std::nullopt);
  }
  NodeId extra = s.Instantiate(build::Arg(build::Name("b")));
  auto v = s.Attach(list, "items", extra);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->code, ViolationCode::kArity);
}

TEST(AttachTest, ContextualRulesReject) {
  Sketch s;
  NodeId cls = s.Instantiate(build::ClassDef("A"));
  ASSERT_EQ(s.Attach(s.root(), "body", cls), std::nullopt);
  NodeId body = s.node(cls).slot("body")[0];
  auto self_fn = s.Instantiate(build::FunctionDef("m", {"self"}));
  EXPECT_EQ(s.Attach(body, "stmts", self_fn)->code,
            ViolationCode::kRedundantSelf);
  auto ret = s.Instantiate(build::Return());
  EXPECT_EQ(s.Attach(body, "stmts", ret)->code,
            ViolationCode::kReturnOutsideFunction);
  auto dup = s.Instantiate(build::FunctionDef("f", {"a", "a"}));
  EXPECT_EQ(s.Attach(s.root(), "body", dup)->code,
            ViolationCode::kDuplicateParam);
  auto call = s.Instantiate(build::ExprStmt(build::Call(
      build::Name("f"),
      {build::Arg(build::Name("a"), "k"), build::Arg(build::Name("b"))})));
  EXPECT_EQ(s.Attach(s.root(), "body", call)->code, ViolationCode::kArgOrder);
  auto unnamed = s.Instantiate(build::Hole(""));
  EXPECT_EQ(s.Attach(s.root(), "body", unnamed)->code,
            ViolationCode::kMissingLabel);
  auto underscore = s.Instantiate(build::ExprStmt(build::Name("_")));
  EXPECT_EQ(s.Attach(s.root(), "body", underscore)->code,
            ViolationCode::kInvalidIdentifier);
  EXPECT_TRUE(Validate(s).empty());
}

TEST(AttachTest, AttachThenDetachRestores) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Sketch s = testing::RandomSketch(rng, 6);
    const Sketch before = s;
    NodeId child = s.Instantiate(testing::RandomStatement(rng, 1));
    if (s.Attach(s.root(), "body", child, 0)) continue;
    ASSERT_EQ(s.Detach(child), std::nullopt);
    EXPECT_TRUE(s.StructurallyEqual(before));
  }
}

TEST(AttachTest, DetachKeepsRequiredSlots) {
  Sketch s;
  NodeId fn = s.NewNode(NodeKind::kFunctionDef, {{"name", "f"}});
  auto v = s.Detach(s.node(fn).slot("body")[0]);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->code, ViolationCode::kArity);
}

TEST(ValidateTest, EmptyModuleOk) { EXPECT_TRUE(Validate(Sketch()).empty()); }

TEST(ValidateTest, ClassWithEmptyNameIsMissingName) {
  std::map<NodeId, SketchNode> nodes;
  nodes[0] = {0, NodeKind::kModule, {}, {{"body", {1}}}, {}, ""};
  nodes[1] = {1, NodeKind::kClassDef, {{"name", ""}}, {{"body", {2}}}, 0,
              "body"};
  nodes[2] = {2, NodeKind::kBody, {}, {{"stmts", {}}}, 1, "body"};
  auto v = Validate(Sketch::FromNodes(0, nodes, 3));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, ViolationCode::kMissingName);
}

TEST(ValidateTest, DetectsCyclesAndBrokenLinks) {
  std::map<NodeId, SketchNode> nodes;
  nodes[0] = {0, NodeKind::kModule, {}, {{"body", {}}}, {}, ""};
  nodes[1] = {1, NodeKind::kBody, {}, {{"stmts", {2}}}, 2, "stmts"};
  nodes[2] = {2, NodeKind::kBody, {}, {{"stmts", {1}}}, 1, "stmts"};
  auto v = Validate(Sketch::FromNodes(0, nodes, 3));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].code, ViolationCode::kCycle);

  nodes.erase(2);
  nodes[1].parent = 7;
  EXPECT_EQ(Validate(Sketch::FromNodes(0, nodes, 3))[0].code,
            ViolationCode::kBrokenLink);
}

TEST(SchemaTest, EverySlotListedOnce) {
  std::map<std::pair<NodeKind, std::string>, int> seen;
  for (const SlotRule& r : SlotSchema()) {
    ++seen[{r.parent, std::string(r.slot)}];
    EXPECT_FALSE(r.allowed.empty());
  }
  for (const auto& [key, count] : seen) EXPECT_EQ(count, 1);
  EXPECT_NE(SchemaMarkdown().find("| ArgList | items | Arg | 0..8 |"),
            std::string::npos);
}

TEST(SchemaTest, LiteralChecks) {
  EXPECT_TRUE(IsIdentifier("__init__"));
  EXPECT_FALSE(IsIdentifier("class"));
  EXPECT_FALSE(IsIdentifier("2x"));
  EXPECT_TRUE(IsDottedName("torch.utils.data"));
  EXPECT_FALSE(IsDottedName("torch..data"));
  EXPECT_TRUE(IsNumberLiteral("3.5e-2"));
  EXPECT_FALSE(IsNumberLiteral("007"));
  EXPECT_FALSE(IsValidLabel("a, b"));
  EXPECT_TRUE(IsValidLabel("handler body"));
}

TEST(RenderTest, EmptyModule) { EXPECT_EQ(Render(Sketch()), ""); }

TEST(RenderTest, Pass) {
  Sketch s;
  ASSERT_EQ(s.Attach(s.root(), "body", s.Instantiate(build::Pass())),
            std::nullopt);
  EXPECT_EQ(Render(s), "pass\n");
}

TEST(RenderTest, TeaserGolden) {
  EXPECT_EQ(Render(TeaserSketch()), testing::ReadFixture("teaser.sketch.py"));
}

TEST(RenderTest, HolesCollectLabelsPerLine) {
  Sketch s;
  auto stmt = build::Assign(
      build::Hole("name"),
      build::Call(build::Name("f"), {build::Arg(build::Hole("a")),
                                     build::Arg(build::Hole("b"), "k")}));
  ASSERT_EQ(s.Attach(s.root(), "body", s.Instantiate(stmt)), std::nullopt);
  ASSERT_EQ(s.Attach(s.root(), "body",
                     s.Instantiate(build::FunctionDef("g", {"x"}))),
            std::nullopt);
  EXPECT_EQ(Render(s), "_ = f(..., k=...)  # name, a, b\ndef g(x):\n    ...\n");
}

TEST(RenderTest, StringEscapes) {
  EXPECT_EQ(QuoteString("a\"b\\\n\x01"), "\"a\\\"b\\\\\\n\\x01\"");
}

TEST(RenderTest, RandomSketchesCompileAndAreInjective) {
  std::mt19937 rng(2024);
  std::vector<Sketch> sketches;
  std::vector<std::string> renders;
  for (int i = 0; i < 600; ++i) {
    Sketch s = testing::RandomSketch(rng, 1 + static_cast<int>(rng() % 5));
    ASSERT_TRUE(Validate(s).empty());
    renders.push_back(Render(s));
    ASSERT_EQ(Render(s), renders.back());
    sketches.push_back(std::move(s));
  }
  auto verdicts = testing::CompileWithPython(renders);
  for (std::size_t i = 0; i < renders.size(); ++i) {
    EXPECT_FALSE(verdicts[i].has_value())
        << *verdicts[i] << "\n" << renders[i];
  }
  std::map<std::string, std::size_t> first_with_render;
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < renders.size(); ++i) {
    auto [it, inserted] = first_with_render.emplace(renders[i], i);
    if (inserted) continue;
    ++collisions;
    EXPECT_TRUE(sketches[i].StructurallyEqual(sketches[it->second]))
        << renders[i];
  }
  EXPECT_GT(collisions, 0u);  // the generator does revisit small shapes
}

TEST(IdentifiersTest, AssignmentIsVariable) {
  EXPECT_EQ(ExtractIdentifiers("app = Flask(__name__)"),
            (std::vector<Identifier>{{"app", IdentifierKind::kVariable, 1}}));
  EXPECT_TRUE(ExtractIdentifiers("").empty());
}

TEST(IdentifiersTest, DefsAndClasses) {
  EXPECT_EQ(ExtractIdentifiers("def loader(self): ...\nclass Net: ..."),
            (std::vector<Identifier>{{"loader", IdentifierKind::kFunction, 1},
                                     {"Net", IdentifierKind::kClass, 2}}));
}

TEST(IdentifiersTest, LexicalEdgeCases) {
  const std::string code =
      "x: int = 3\n"
      "if x == 2:\n"
      "    y = 4\n"
      "    def inner(a):\n"
      "x = 5\n"
      "else:\n"
      "class Broken(\n"
      "async def fetch(url):\n"
      "def not_a_call\n";
  auto ids = ExtractIdentifiers(code);
  EXPECT_EQ(ids, (std::vector<Identifier>{
                     {"x", IdentifierKind::kVariable, 1},
                     {"inner", IdentifierKind::kFunction, 4},
                     {"Broken", IdentifierKind::kClass, 7},
                     {"fetch", IdentifierKind::kFunction, 8}}));
}

}  // namespace
}  // namespace langsketch::sketch

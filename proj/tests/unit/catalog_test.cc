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

#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "langsketch/catalog/catalog.h"
#include "langsketch/catalog/code_index.h"
#include "langsketch/errors.h"
#include "langsketch/sketch/render.h"
#include "support/python_oracle.h"

namespace langsketch::catalog {
namespace {

using nlohmann::json;

json Entry(std::string name, std::string kind, std::string tmpl) {
  return {{"name", name},
          {"aliases", {name}},
          {"kind", kind},
          {"template", tmpl}};
}

SnippetCatalog One(json entry) {
  return LoadCatalog(json{{"snippets", json::array({entry})}});
}

TEST(NormalizeAliasTest, CollapsesPunctuationAndCase) {
  EXPECT_EQ(NormalizeAlias("  PyTorch--Dataset!! "), "pytorch dataset");
  EXPECT_EQ(NormalizeAlias("GET handler"), "get handler");
  EXPECT_EQ(NormalizeAlias("..."), "");
}

TEST(LoadCatalogTest, EmptyDocuments) {
  EXPECT_TRUE(LoadCatalogText("").empty());
  EXPECT_TRUE(LoadCatalogText("{}").empty());
  EXPECT_TRUE(LoadCatalogText(R"({"snippets": []})").empty());
}

TEST(LoadCatalogTest, SchemaErrorsCarryEntryIndex) {
  json doc = {{"snippets",
               {Entry("a", "function", "def a():\n    ${1:body}\n"),
                {{"name", "b"}, {"kind", "function"}, {"template", "x = 1"}}}}};
  try {
    LoadCatalog(doc);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.entry(), 1u);
  }
  EXPECT_THROW(LoadCatalogText("[1]"), SchemaError);
  EXPECT_THROW(LoadCatalogText("{not json"), SchemaError);
  EXPECT_THROW(One(Entry("a", "widget", "x = 1")), SchemaError);
  json extra = Entry("a", "variable", "x = 1");
  extra["color"] = "red";
  EXPECT_THROW(One(extra), SchemaError);
  EXPECT_THROW(LoadCatalog(json{{"snippets",
                                 {Entry("a", "variable", "x = 1"),
                                  Entry("a", "variable", "y = 2")}}}),
               SchemaError);
}

TEST(LoadCatalogTest, TemplateErrors) {
  EXPECT_THROW(One(Entry("a", "function", "def (:\n")), TemplateError);
  EXPECT_THROW(One(Entry("a", "class", "x = 1\n")), TemplateError);
  EXPECT_THROW(One(Entry("a", "variable", "x = ${1}\n")), TemplateError);
  EXPECT_THROW(One(Entry("a", "variable", "${1:a} = ${1:b}\n")),
               TemplateError);
  EXPECT_THROW(One(Entry("a", "expression", "f(...)")), TemplateError);
  EXPECT_THROW(One(Entry("a", "statement", "return 1\n")), TemplateError);
}

TEST(LoadCatalogTest, HolesAreRecordedInOrdinalOrder) {
  SnippetCatalog c =
      One(Entry("run", "statement", "app.run(host=${1:host}, port=${2:port})"));
  ASSERT_EQ(c.size(), 1u);
  ASSERT_EQ(c.snippets()[0].holes.size(), 2u);
  EXPECT_EQ(c.snippets()[0].holes[0].label, "host");
  EXPECT_EQ(c.snippets()[0].holes[1].label, "port");
}

TEST(StarterCatalogTest, LoadsAndRoundTrips) {
  const SnippetCatalog& starter = StarterCatalog();
  ASSERT_FALSE(starter.empty());
  EXPECT_NE(starter.Find("pytorch-dataset"), nullptr);
  EXPECT_EQ(LoadCatalog(SerializeCatalog(starter)), starter);
  const auto& hits = starter.ByAlias(NormalizeAlias("PyTorch Dataset"));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(starter.snippets()[hits[0]].name, "pytorch-dataset");
}

TEST(StarterCatalogTest, EverySnippetRendersAsPython) {
  std::vector<std::string> sources;
  for (const Snippet& s : StarterCatalog().snippets()) {
    sketch::Sketch sk;
    sketch::NodeId id = Instantiate(sk, s);
    if (s.kind == SnippetKind::kExpression) {
      sketch::NodeId stmt = sk.NewNode(sketch::NodeKind::kExprStmt);
      ASSERT_FALSE(sk.Attach(stmt, "value", id).has_value());
      id = stmt;
    }
    ASSERT_FALSE(sk.Attach(sk.root(), "body", id).has_value()) << s.name;
    sources.push_back(sketch::Render(sk));
  }
  auto errors = testing::CompileWithPython(sources);
  for (std::size_t i = 0; i < errors.size(); ++i) {
    EXPECT_FALSE(errors[i].has_value()) << sources[i] << *errors[i];
  }
}

TEST(InstantiateTest, CopiesHaveDisjointIds) {
  const Snippet* s = StarterCatalog().Find("pytorch-dataset");
  ASSERT_NE(s, nullptr);
  sketch::Sketch sk;
  sketch::NodeId a = Instantiate(sk, *s);
  sketch::NodeId b = Instantiate(sk, *s);
  EXPECT_NE(a, b);
  EXPECT_EQ(sk.Extract(a), sk.Extract(b));
}

TEST(CodeIndexTest, RevisionsIncrease) {
  auto a = RefreshIndex("def load():\n    pass\n");
  auto b = RefreshIndex("x = 1\n");
  EXPECT_LT(a->revision, b->revision);
  ASSERT_EQ(a->identifiers.size(), 1u);
  EXPECT_EQ(a->identifiers[0].name, "load");
}

}  // namespace
}  // namespace langsketch::catalog

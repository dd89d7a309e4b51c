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

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "langsketch/nlp/analysis.h"
#include "langsketch/nlp/parser.h"
#include "langsketch/nlp/phrases.h"
#include "langsketch/nlp/tagger.h"
#include "langsketch/nlp/tokenizer.h"
#include "support/fixtures.h"

namespace langsketch::nlp {
namespace {

std::vector<std::string> Texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

std::vector<PosTag> TagsOf(std::string_view text) {
  return TagPos(Tokenize(text));
}

TEST(TokenizeTest, EmptyInput) { EXPECT_TRUE(Tokenize("").empty()); }

TEST(TokenizeTest, WhitespaceSplitWithOffsets) {
  auto tokens = Tokenize("Define a PyTorch dataset");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(Texts(tokens),
            (std::vector<std::string>{"Define", "a", "PyTorch", "dataset"}));
  EXPECT_EQ(tokens[0].start, 0u);
  EXPECT_EQ(tokens[0].end, 6u);
  EXPECT_EQ(tokens[1].start, 7u);
  EXPECT_EQ(tokens[2].start, 9u);
  EXPECT_EQ(tokens[3].start, 17u);
  EXPECT_EQ(tokens[3].end, 24u);
}

TEST(TokenizeTest, TrailingPunctuationSplitsAndIsTaggedPunct) {
  auto tokens = Tokenize("reads JSON.");
  EXPECT_EQ(Texts(tokens), (std::vector<std::string>{"reads", "JSON", "."}));
  EXPECT_EQ(TagPos(tokens)[2], PosTag::kPunct);
}

TEST(TokenizeTest, IdentifiersStayWhole) {
  EXPECT_EQ(Texts(Tokenize("(train.csv) __init__, load_img")),
            (std::vector<std::string>{"(", "train.csv", ")", "__init__", ",",
                                      "load_img"}));
}

TEST(TokenizeTest, ReconstructRoundTripsRandomText) {
  std::mt19937 rng(7);
  const std::string alphabet = "ab .,;()\"'\t\n_x1";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 30);
    for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    auto tokens = Tokenize(text);
    ASSERT_EQ(Reconstruct(text, tokens), text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      ASSERT_EQ(text.substr(tokens[i].start, tokens[i].end - tokens[i].start),
                tokens[i].text);
      if (i > 0) ASSERT_LE(tokens[i - 1].end, tokens[i].start);
    }
  }
}

TEST(TagPosTest, PaperTeaserWords) {
  auto tags = TagsOf("a loader function that reads JSON");
  EXPECT_EQ(tags[4], PosTag::kVerb);
  EXPECT_EQ(tags[5], PosTag::kNoun);
}

TEST(TagPosTest, ClosedClass) {
  auto tags = TagsOf("Define a class with it");
  EXPECT_EQ(tags[1], PosTag::kDet);
  EXPECT_EQ(tags[3], PosTag::kAdp);
  EXPECT_EQ(tags[4], PosTag::kPron);
  EXPECT_EQ(TagsOf("It returns")[0], PosTag::kPron);
}

TEST(TagPosTest, HeuristicsAndFallback) {
  EXPECT_EQ(TagsOf("The app should liste")[3], PosTag::kVerb);
  EXPECT_EQ(TagsOf("Create a Flask app")[2], PosTag::kPropn);
  EXPECT_EQ(TagsOf("open train.csv")[1], PosTag::kPropn);
  EXPECT_EQ(TagsOf("the zorblax")[1], PosTag::kNoun);
  EXPECT_EQ(TagsOf("the GET handler")[1], PosTag::kPropn);
  EXPECT_EQ(TagsOf("it sorts")[1], PosTag::kVerb);
  EXPECT_EQ(TagsOf("the weights")[1], PosTag::kNoun);
  EXPECT_EQ(TagsOf("a forward method")[1], PosTag::kNoun);
  EXPECT_EQ(TagsOf("wait 42 seconds")[1], PosTag::kNum);
}

TEST(LexiconTest, ParseRejectsMalformedLines) {
  EXPECT_THROW(Lexicon::Parse("word\n"), std::invalid_argument);
  EXPECT_THROW(Lexicon::Parse("word\tBOGUS\n"), std::invalid_argument);
  auto lex = Lexicon::Parse("# comment\n\nfoo\tVERB\nFOO\tPROPN");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.Lookup("FOO"), PosTag::kPropn);
  EXPECT_EQ(lex.Lookup("Foo"), PosTag::kVerb);
}

TEST(LexiconTest, CompletionOrder) {
  auto lex = Lexicon::Parse("listen\tVERB\nlist\tNOUN\nlisten_x\tNOUN\n");
  auto c = lex.Complete("lis", 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].first, "list");
  EXPECT_EQ(c[1].first, "listen");
  EXPECT_EQ(Lexicon::Default().Complete("liste", 3).front().first, "listen");
}

TEST(ParserTest, SingleTokenIsRoot) {
  auto tokens = Tokenize("run");
  auto tree = ParseDependencies(tokens, TagPos(tokens));
  ASSERT_EQ(tree.size(), 1u);
  EXPECT_EQ(tree.arcs[0].head, kRootHead);
  EXPECT_EQ(tree.arcs[0].label, DepLabel::kRoot);
}

TEST(ParserTest, TeaserWithAttachment) {
  auto tokens = Tokenize("Define a PyTorch dataset with a loader function");
  auto tree = ParseDependencies(tokens, TagPos(tokens));
  EXPECT_EQ(tree.head_of(7), 4);
  EXPECT_EQ(tree.label_of(7), DepLabel::kPobj);
  EXPECT_EQ(tree.head_of(4), 3);
  EXPECT_EQ(tree.label_of(4), DepLabel::kPrep);
}

TEST(ParserTest, GoldCorpusExactArcs) {
  auto records = ParseGoldFixture(testing::ReadFixture("gold_parses.tsv"));
  ASSERT_EQ(records.size(), 25u);
  for (const GoldRecord& rec : records) {
    auto tokens = Tokenize(rec.text);
    auto tree = ParseDependencies(tokens, TagPos(tokens));
    DependencyTree gold;
    gold.arcs = rec.arcs;
    EXPECT_EQ(FormatArcs(tree), FormatArcs(gold)) << rec.text;
    EXPECT_EQ(CheckTree(gold), "") << rec.text;
  }
}

TEST(ParserTest, MultipleSentencesJoinAtFirstRoot) {
  auto tokens = Tokenize("Define a loader function. It returns a list");
  auto tree = ParseDependencies(tokens, TagPos(tokens));
  EXPECT_EQ(CheckTree(tree), "");
  EXPECT_EQ(tree.root(), 0);
  EXPECT_EQ(tree.head_of(6), 0);
  EXPECT_EQ(tree.label_of(6), DepLabel::kOther);
}

TEST(ParserTest, UnsupportedInputFallsBackWithFlag) {
  auto tokens = Tokenize("with with of and or the");
  auto tree = ParseDependencies(tokens, TagPos(tokens));
  EXPECT_EQ(CheckTree(tree), "");
  EXPECT_TRUE(tree.low_confidence);
}

TEST(ParserTest, RandomWordSoupAlwaysYieldsValidTree) {
  const std::vector<std::string> words = {
      "Define", "a",   "the",   "with", "that", "reads", "JSON", "it",
      "and",    "to",  "is",    "should", ".",  ";",     "file", "function",
      "loader", "of",  "class", "list", "sort", "GET",   "42",   "quickly",
      "which",  "from", "into", "Flask", "app", "run",   "a",    "train.csv"};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    const int len = 1 + static_cast<int>(rng() % 14);
    for (int i = 0; i < len; ++i) {
      if (i) text += ' ';
      text += words[rng() % words.size()];
    }
    auto tokens = Tokenize(text);
    auto tree = ParseDependencies(tokens, TagPos(tokens));
    ASSERT_EQ(tree.size(), tokens.size()) << text;
    ASSERT_EQ(CheckTree(tree), "") << text;
  }
}

TEST(ParserTest, AppendingAfterCompletedSentenceKeepsEarlierArcs) {
  const std::vector<std::string> prefixes = {
      "Define a PyTorch dataset with a loader function. ",
      "Open the file and read the lines. ",
      "The app should listen; ",
  };
  const std::vector<std::string> tails = {"It", "It returns", "the function",
                                          "Send the user a token", "and"};
  for (const auto& prefix : prefixes) {
    auto base = Analyze(prefix, prefix.size());
    const std::size_t boundary = base.sentences.back().last_token;
    for (const auto& tail : tails) {
      auto ext = Analyze(prefix + tail, prefix.size() + tail.size());
      for (std::size_t i = 0; i < boundary; ++i) {
        EXPECT_EQ(base.tree.arcs[i], ext.tree.arcs[i]) << prefix + tail;
      }
    }
  }
}

TEST(ChunkPhrasesTest, DeterminerExcluded) {
  auto s = Analyze("Define a loader function", 24);
  ASSERT_EQ(s.phrases.size(), 2u);
  EXPECT_EQ(s.phrases[1].text, "loader function");
  EXPECT_EQ(s.phrases[1].head_token, 3u);
  ASSERT_TRUE(s.phrases[1].det_token.has_value());
  EXPECT_EQ(*s.phrases[1].det_token, 1u);
}

TEST(ChunkPhrasesTest, CompoundAndVerbNounPhrases) {
  auto s = Analyze("Define a PyTorch dataset that reads JSON", 0);
  std::vector<std::string> texts;
  for (const auto& p : s.phrases) texts.push_back(p.text);
  EXPECT_EQ(texts, (std::vector<std::string>{"Define", "PyTorch dataset",
                                             "that", "reads", "JSON"}));
  EXPECT_EQ(s.phrases[3].pos, PosTag::kVerb);
  EXPECT_EQ(s.phrases[4].pos, PosTag::kNoun);
}

TEST(ChunkPhrasesTest, EveryHeadTagYieldsOnePhrase) {
  for (const char* text :
       {"Define a class with a forward method and a helper function",
        "Print the shape of SalePrice in train.csv", "It returns a list"}) {
    auto s = Analyze(text, 0);
    for (std::size_t t = 0; t < s.tokens.size(); ++t) {
      int covering = 0;
      for (const auto& p : s.phrases) covering += p.contains_token(t);
      ASSERT_LE(covering, 1);
      const PosTag tag = s.tags[t];
      const bool head_tag = tag == PosTag::kNoun || tag == PosTag::kPropn ||
                            tag == PosTag::kVerb || tag == PosTag::kPron;
      if (head_tag) EXPECT_EQ(covering, 1) << text << " token " << t;
    }
  }
}

TEST(CorefTest, PronounLinksBackToFunction) {
  auto s = Analyze("Define a loader function. It returns a list", 0);
  ASSERT_EQ(s.coref.size(), 1u);
  EXPECT_EQ(s.coref[0].anaphor.text, "It");
  EXPECT_EQ(s.coref[0].antecedent.text, "loader function");
}

TEST(CorefTest, DefiniteKindKeyword) {
  auto s = Analyze("Define a loader function and call the function", 0);
  ASSERT_EQ(s.coref.size(), 1u);
  EXPECT_EQ(s.coref[0].anaphor.text, "function");
  EXPECT_EQ(s.coref[0].antecedent.text, "loader function");
  auto method = Analyze("Add a save method. Test the function", 0);
  ASSERT_EQ(method.coref.size(), 1u);
  EXPECT_EQ(method.coref[0].antecedent.text, "save method");
}

TEST(CorefTest, NoPronounsNoLinks) {
  EXPECT_TRUE(Analyze("Create a Flask app", 0).coref.empty());
  EXPECT_TRUE(Analyze("It returns", 0).coref.empty());
}

TEST(CorefTest, LinksAlwaysPointBackward) {
  for (const char* text :
       {"Load the file and print it", "Define a function. Call the function",
        "Open it. Read the list and sort the list"}) {
    auto s = Analyze(text, 0);
    for (const auto& link : s.coref) {
      EXPECT_LT(link.antecedent.head_token, link.anaphor.head_token);
    }
  }
}

TEST(AnalyzeTest, EmptyPrompt) {
  auto s = Analyze("", 0);
  EXPECT_TRUE(s.tokens.empty());
  EXPECT_EQ(s.current(), nullptr);
}

TEST(AnalyzeTest, PartialWordIsCurrent) {
  auto s = Analyze("The app should liste", 20);
  ASSERT_NE(s.current(), nullptr);
  EXPECT_EQ(s.tokens[s.current()->head_token].text, "liste");
  EXPECT_TRUE(s.current_is_partial());
}

TEST(AnalyzeTest, CursorAtEndSelectsLastPhrase) {
  auto s = Analyze("Define a PyTorch dataset with a loader function", 47);
  ASSERT_NE(s.current(), nullptr);
  EXPECT_EQ(s.current()->text, "loader function");
}

TEST(AnalyzeTest, TrailingSpaceKeepsPrecedingPhraseNotPartial) {
  auto s = Analyze("Create a Flask app ", 19);
  ASSERT_NE(s.current(), nullptr);
  EXPECT_EQ(s.current()->text, "Flask app");
  EXPECT_FALSE(s.current_is_partial());
}

TEST(AnalyzeTest, Deterministic) {
  auto a = Analyze("Define a function that sorts the list and returns it", 30);
  auto b = Analyze("Define a function that sorts the list and returns it", 30);
  b.revision = 99;
  EXPECT_TRUE(SameAnalysis(a, b));
}

}  // namespace
}  // namespace langsketch::nlp

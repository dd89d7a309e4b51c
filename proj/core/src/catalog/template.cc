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

#include "langsketch/catalog/template.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "langsketch/errors.h"
#include "langsketch/sketch/schema.h"
#include "langsketch/sketch/sketch.h"

namespace langsketch::catalog {
namespace {

using sketch::Fragment;
using sketch::NodeKind;
namespace build = sketch::build;

enum class Tok { kName, kNumber, kString, kHole, kLParen, kRParen, kComma,
                 kEquals, kDot, kEllipsis, kEnd };

struct Token {
  Tok type;
  std::string text;
  int ordinal = 0;
};

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class TemplateParser {
 public:
  TemplateParser(std::string snippet) : snippet_(std::move(snippet)) {}

  [[noreturn]] void Fail(const std::string& why) const {
    throw TemplateError(snippet_, why);
  }

  std::vector<Token> Lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == ' ' || c == '\t') {
        ++i;
      } else if (c == '$' && i + 1 < s.size() && s[i + 1] == '{') {
        std::size_t close = s.find('}', i);
        if (close == std::string_view::npos) Fail("unterminated hole marker");
        std::string_view body = s.substr(i + 2, close - i - 2);
        std::size_t colon = body.find(':');
        if (colon == std::string_view::npos || colon == 0) {
          Fail("hole marker needs the form ${n:label}");
        }
        Token t{Tok::kHole, Trim(body.substr(colon + 1)), 0};
        std::string_view num = body.substr(0, colon);
        if (!std::all_of(num.begin(), num.end(), [](char d) {
              return std::isdigit(static_cast<unsigned char>(d)) != 0;
            }) || num.size() > 6) {
          Fail("hole ordinal '" + std::string(num) + "' is not a number");
        }
        t.ordinal = std::stoi(std::string(num));
        if (!sketch::IsValidLabel(t.text)) {
          Fail("hole " + std::to_string(t.ordinal) + " needs a label " +
               "without commas or control characters");
        }
        if (!ordinals_.emplace(t.ordinal, t.text).second) {
          Fail("hole ordinal " + std::to_string(t.ordinal) + " used twice");
        }
        out.push_back(std::move(t));
        i = close + 1;
      } else if (s.substr(i, 3) == "...") {
        out.push_back({Tok::kEllipsis, "...", 0});
        i += 3;
      } else if (c == '(' || c == ')' || c == ',' || c == '=' || c == '.') {
        Tok type = c == '(' ? Tok::kLParen
                   : c == ')' ? Tok::kRParen
                   : c == ',' ? Tok::kComma
                   : c == '=' ? Tok::kEquals
                              : Tok::kDot;
        if (c == '=' && i + 1 < s.size() && s[i + 1] == '=') {
          Fail("comparison operators are not supported");
        }
        out.push_back({type, std::string(1, c), 0});
        ++i;
      } else if (c == '"' || c == '\'') {
        std::string value;
        std::size_t j = i + 1;
        for (; j < s.size() && s[j] != c; ++j) {
          if (s[j] == '\\' && j + 1 < s.size()) {
            ++j;
            switch (s[j]) {
              case 'n': value += '\n'; break;
              case 't': value += '\t'; break;
              case 'r': value += '\r'; break;
              default: value += s[j];
            }
          } else {
            value += s[j];
          }
        }
        if (j >= s.size()) Fail("unterminated string literal");
        out.push_back({Tok::kString, value, 0});
        i = j + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() &&
               (IsIdentChar(s[j]) || s[j] == '.' ||
                ((s[j] == '+' || s[j] == '-') && (s[j - 1] == 'e' ||
                                                  s[j - 1] == 'E')))) {
          ++j;
        }
        std::string num(s.substr(i, j - i));
        if (!sketch::IsNumberLiteral(num)) Fail("bad number '" + num + "'");
        out.push_back({Tok::kNumber, num, 0});
        i = j;
      } else if (IsIdentChar(c)) {
        std::size_t j = i;
        while (j < s.size() && IsIdentChar(s[j])) ++j;
        out.push_back({Tok::kName, std::string(s.substr(i, j - i)), 0});
        i = j;
      } else {
        Fail(std::string("unsupported character '") + c + "'");
      }
    }
    out.push_back({Tok::kEnd, "", 0});
    return out;
  }

  // Expression over tokens_[pos_..].
  Fragment Expression() {
    Fragment e = Primary();
    while (true) {
      if (Peek().type == Tok::kDot) {
        ++pos_;
        if (Peek().type != Tok::kName) Fail("expected attribute name");
        e = build::Attribute(std::move(e), tokens_[pos_++].text);
      } else if (Peek().type == Tok::kLParen) {
        ++pos_;
        std::vector<Fragment> args;
        while (Peek().type != Tok::kRParen) {
          if (Peek().type == Tok::kName && Peek(1).type == Tok::kEquals) {
            std::string name = tokens_[pos_].text;
            pos_ += 2;
            args.push_back(build::Arg(Expression(), name));
          } else {
            args.push_back(build::Arg(Expression()));
          }
          if (Peek().type == Tok::kComma) {
            ++pos_;
          } else if (Peek().type != Tok::kRParen) {
            Fail("expected ',' or ')' in call");
          }
        }
        ++pos_;
        e = build::Call(std::move(e), std::move(args));
      } else {
        return e;
      }
    }
  }

  Fragment Primary() {
    const Token& t = Peek();
    ++pos_;
    switch (t.type) {
      case Tok::kName:
        return build::Name(t.text);
      case Tok::kNumber:
        return build::Number(t.text);
      case Tok::kString:
        return build::String(t.text);
      case Tok::kHole:
        return build::Hole(t.text);
      case Tok::kEllipsis:
        Fail("use a labeled ${n:label} marker instead of '...' in an "
             "expression");
      default:
        Fail("unexpected '" + t.text + "'");
    }
  }

  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  Fragment ParseExpressionText(std::string_view text) {
    tokens_ = Lex(text);
    pos_ = 0;
    Fragment e = Expression();
    if (Peek().type != Tok::kEnd) Fail("trailing text after expression");
    return e;
  }

  struct Line {
    std::size_t number;
    std::size_t indent;
    std::string text;
  };

  std::vector<Fragment> Block(const std::vector<Line>& lines, std::size_t& i,
                              std::size_t indent, bool in_class) {
    std::vector<Fragment> out;
    std::optional<Fragment> decorator;
    while (i < lines.size() && lines[i].indent == indent) {
      const Line& line = lines[i++];
      const std::string& t = line.text;
      auto children = [&](bool class_body) {
        if (i >= lines.size() || lines[i].indent <= indent) {
          Fail("line " + std::to_string(line.number) +
               ": block needs an indented body");
        }
        return Block(lines, i, lines[i].indent, class_body);
      };
      if (t[0] == '@') {
        if (decorator) Fail("only one decorator per definition");
        decorator = build::Decorator(ParseExpressionText(t.substr(1)));
        continue;
      }
      if (t.rfind("class ", 0) == 0 || t.rfind("def ", 0) == 0) {
        const bool is_class = t[0] == 'c';
        if (t.back() != ':') Fail("line " + std::to_string(line.number) +
                                  ": definition must end with ':'");
        std::string head = Trim(t.substr(is_class ? 6 : 4,
                                         t.size() - (is_class ? 7 : 5)));
        std::string name = head;
        std::string inside;
        std::size_t open = head.find('(');
        if (open != std::string::npos) {
          if (head.back() != ')') Fail("unbalanced parentheses in definition");
          name = Trim(head.substr(0, open));
          inside = head.substr(open + 1, head.size() - open - 2);
        } else if (!is_class) {
          Fail("function definition needs a parameter list");
        }
        std::vector<Fragment> body = children(is_class);
        if (is_class) {
          out.push_back(build::ClassDef(name, Trim(inside), std::move(body),
                                        std::move(decorator)));
        } else {
          std::vector<std::string> params;
          std::size_t start = 0;
          while (!Trim(inside).empty()) {
            std::size_t comma = inside.find(',', start);
            params.push_back(Trim(inside.substr(
                start, comma == std::string::npos ? std::string::npos
                                                  : comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
          }
          if (in_class && !params.empty() && params.front() == "self") {
            params.erase(params.begin());
          }
          out.push_back(build::FunctionDef(name, std::move(params),
                                           std::move(body),
                                           std::move(decorator)));
        }
        decorator.reset();
        continue;
      }
      if (decorator) Fail("decorator must precede a def or class");
      if (i < lines.size() && lines[i].indent > indent) {
        Fail("line " + std::to_string(lines[i].number) +
             ": unexpected indentation");
      }
      if (t == "...") continue;
      if (t == "pass") {
        out.push_back(build::Pass());
      } else if (t == "return") {
        out.push_back(build::Return());
      } else if (t.rfind("return ", 0) == 0) {
        out.push_back(build::Return(ParseExpressionText(t.substr(7))));
      } else if (t.rfind("import ", 0) == 0) {
        out.push_back(build::Import(Trim(t.substr(7))));
      } else if (t.rfind("from ", 0) == 0) {
        std::size_t imp = t.find(" import ");
        if (imp == std::string::npos) Fail("from-import without 'import'");
        out.push_back(build::Import(Trim(t.substr(5, imp - 5)),
                                    Trim(t.substr(imp + 8))));
      } else {
        tokens_ = Lex(t);
        pos_ = 0;
        Fragment first = Expression();
        if (Peek().type == Tok::kEquals) {
          ++pos_;
          Fragment value = Expression();
          if (Peek().type != Tok::kEnd) Fail("trailing text after assignment");
          out.push_back(build::Assign(std::move(first), std::move(value)));
        } else if (Peek().type != Tok::kEnd) {
          Fail("line " + std::to_string(line.number) + ": unexpected '" +
               Peek().text + "'");
        } else if (first.kind == NodeKind::kHole) {
          out.push_back(std::move(first));
        } else {
          out.push_back(build::ExprStmt(std::move(first)));
        }
      }
    }
    if (decorator) Fail("decorator at end of block");
    return out;
  }

  std::vector<Fragment> Statements(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string_view raw = text.substr(pos, nl - pos);
      pos = nl + 1;
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      std::size_t indent = 0;
      while (indent < raw.size() && raw[indent] == ' ') ++indent;
      if (indent < raw.size() && raw[indent] == '\t') {
        Fail("line " + std::to_string(number) + ": tabs are not supported");
      }
      std::string body = Trim(raw);
      if (!body.empty() && body[0] != '#') {
        lines.push_back({number, indent, body});
      }
      if (nl == text.size()) break;
    }
    if (lines.empty()) return {};
    std::size_t i = 0;
    auto out = Block(lines, i, lines.front().indent, false);
    if (i != lines.size()) {
      Fail("line " + std::to_string(lines[i].number) + ": bad dedent");
    }
    return out;
  }

  std::vector<TemplateHole> Holes() const {
    std::vector<TemplateHole> out;
    for (const auto& [ord, label] : ordinals_) out.push_back({ord, label});
    return out;
  }

 private:
  std::string snippet_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<int, std::string> ordinals_;
};

// Instantiates the fragment into a scratch module to reuse the schema and
// contextual checks.
void CheckFragment(const Fragment& f, bool expression,
                   const std::string& snippet) {
  sketch::Sketch s;
  Fragment stmt = f;
  if (expression) stmt = build::Assign(build::Name("value"), f);
  const sketch::NodeId id = s.Instantiate(stmt);
  if (auto v = s.Attach(s.root(), "body", id)) {
    throw TemplateError(snippet, v->ToString());
  }
}

}  // namespace

std::string_view SnippetKindName(SnippetKind kind) {
  switch (kind) {
    case SnippetKind::kClass: return "class";
    case SnippetKind::kFunction: return "function";
    case SnippetKind::kStatement: return "statement";
    case SnippetKind::kExpression: return "expression";
    case SnippetKind::kVariable: return "variable";
  }
  return "statement";
}

std::optional<SnippetKind> ParseSnippetKind(std::string_view name) {
  for (SnippetKind k : {SnippetKind::kClass, SnippetKind::kFunction,
                        SnippetKind::kStatement, SnippetKind::kExpression,
                        SnippetKind::kVariable}) {
    if (SnippetKindName(k) == name) return k;
  }
  return std::nullopt;
}

ParsedTemplate ParseTemplate(std::string_view text, SnippetKind kind,
                             const std::string& snippet) {
  TemplateParser parser(snippet);
  ParsedTemplate out;
  if (kind == SnippetKind::kExpression) {
    std::string t = Trim(text);
    if (t.empty()) parser.Fail("empty expression template");
    out.fragment = parser.ParseExpressionText(t);
    CheckFragment(out.fragment, true, snippet);
  } else {
    auto stmts = parser.Statements(text);
    if (stmts.size() != 1) {
      parser.Fail("template must hold exactly one statement, found " +
                  std::to_string(stmts.size()));
    }
    out.fragment = std::move(stmts.front());
    const NodeKind root = out.fragment.kind;
    if ((kind == SnippetKind::kClass && root != NodeKind::kClassDef) ||
        (kind == SnippetKind::kFunction && root != NodeKind::kFunctionDef) ||
        (kind == SnippetKind::kVariable && root != NodeKind::kAssign)) {
      parser.Fail("root " + std::string(sketch::NodeKindName(root)) +
                  " does not match kind " + std::string(SnippetKindName(kind)));
    }
    CheckFragment(out.fragment, false, snippet);
  }
  out.holes = parser.Holes();
  return out;
}

}  // namespace langsketch::catalog

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

#include "langsketch/sketch/render.h"

#include <cstdio>
#include <stdexcept>

namespace langsketch::sketch {
namespace {

class Renderer {
 public:
  explicit Renderer(const Sketch& s) : s_(s) {}

  std::string Run() {
    for (NodeId id : s_.node(s_.root()).slot("body")) Statement(id, 0, false);
    return out_;
  }

  std::string Expr(NodeId id, std::vector<std::string>& labels) const {
    const SketchNode& n = s_.node(id);
    switch (n.kind) {
      case NodeKind::kName:
        return n.prop("name");
      case NodeKind::kAttribute:
        return Expr(n.slot("value").front(), labels) + "." + n.prop("attr");
      case NodeKind::kStringLit:
        return QuoteString(n.prop("value"));
      case NodeKind::kNumberLit:
        return n.prop("value");
      case NodeKind::kHole:
        labels.push_back(n.prop("label"));
        return "...";
      case NodeKind::kCall: {
        std::string text = Expr(n.slot("func").front(), labels) + "(";
        const SketchNode& list = s_.node(n.slot("args").front());
        bool first = true;
        for (NodeId a : list.slot("items")) {
          const SketchNode& arg = s_.node(a);
          if (!first) text += ", ";
          first = false;
          const std::string name = arg.prop("name");
          if (!name.empty()) text += name + "=";
          text += Expr(arg.slot("value").front(), labels);
        }
        return text + ")";
      }
      default:
        throw std::logic_error("not an expression: " +
                               std::string(NodeKindName(n.kind)));
    }
  }

 private:
  void Line(int indent, const std::string& text,
            const std::vector<std::string>& labels) {
    out_.append(static_cast<std::size_t>(indent) * 4, ' ');
    out_ += text;
    if (!labels.empty()) {
      out_ += "  # ";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out_ += ", ";
        out_ += labels[i];
      }
    }
    out_ += '\n';
  }

  void Decorators(const SketchNode& n, int indent) {
    for (NodeId d : n.slot("decorators")) {
      std::vector<std::string> labels;
      std::string text =
          "@" + Expr(s_.node(d).slot("value").front(), labels);
      Line(indent, text, labels);
    }
  }

  void Body(NodeId body, int indent, bool in_class) {
    const auto& stmts = s_.node(body).slot("stmts");
    if (stmts.empty()) {
      Line(indent, "...", {});
      return;
    }
    for (NodeId st : stmts) Statement(st, indent, in_class);
  }

  void Statement(NodeId id, int indent, bool in_class) {
    const SketchNode& n = s_.node(id);
    std::vector<std::string> labels;
    switch (n.kind) {
      case NodeKind::kClassDef: {
        Decorators(n, indent);
        std::string head = "class " + n.prop("name");
        if (!n.prop("base").empty()) head += "(" + n.prop("base") + ")";
        Line(indent, head + ":", {});
        Body(n.slot("body").front(), indent + 1, true);
        return;
      }
      case NodeKind::kFunctionDef: {
        Decorators(n, indent);
        std::string params = in_class ? "self" : "";
        for (NodeId p : s_.node(n.slot("params").front()).slot("items")) {
          if (!params.empty()) params += ", ";
          params += s_.node(p).prop("name");
        }
        Line(indent, "def " + n.prop("name") + "(" + params + "):", {});
        Body(n.slot("body").front(), indent + 1, false);
        return;
      }
      case NodeKind::kAssign: {
        const NodeId target = n.slot("target").front();
        std::string lhs;
        if (s_.node(target).kind == NodeKind::kHole) {
          labels.push_back(s_.node(target).prop("label"));
          lhs = "_";
        } else {
          lhs = Expr(target, labels);
        }
        Line(indent, lhs + " = " + Expr(n.slot("value").front(), labels),
             labels);
        return;
      }
      case NodeKind::kExprStmt:
        Line(indent, Expr(n.slot("value").front(), labels), labels);
        return;
      case NodeKind::kReturn: {
        std::string text = "return";
        if (!n.slot("value").empty()) {
          text += " " + Expr(n.slot("value").front(), labels);
        }
        Line(indent, text, labels);
        return;
      }
      case NodeKind::kImport: {
        const std::string name = n.prop("name");
        Line(indent,
             name.empty() ? "import " + n.prop("module")
                          : "from " + n.prop("module") + " import " + name,
             {});
        return;
      }
      case NodeKind::kPass:
        Line(indent, "pass", {});
        return;
      case NodeKind::kHole:
        Line(indent, "...", {n.prop("label")});
        return;
      default:
        throw std::logic_error("not a statement: " +
                               std::string(NodeKindName(n.kind)));
    }
  }

  const Sketch& s_;
  std::string out_;
};

}  // namespace

std::string QuoteString(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\x%02x",
                        static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string Render(const Sketch& sketch) {
  auto violations = Validate(sketch);
  if (!violations.empty()) {
    throw std::invalid_argument("cannot render invalid sketch: " +
                                violations.front().ToString());
  }
  return Renderer(sketch).Run();
}

std::string RenderExpression(const Sketch& sketch, NodeId id) {
  std::vector<std::string> labels;
  return Renderer(sketch).Expr(id, labels);
}

}  // namespace langsketch::sketch

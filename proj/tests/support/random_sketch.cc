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

#include "support/random_sketch.h"

#include <string>
#include <vector>

#include "langsketch/sketch/schema.h"

namespace langsketch::testing {
namespace {

using sketch::Fragment;
namespace build = sketch::build;

template <typename T>
const T& Pick(std::mt19937& rng, const std::vector<T>& items) {
  return items[rng() % items.size()];
}

bool Coin(std::mt19937& rng, int percent) {
  return static_cast<int>(rng() % 100) < percent;
}

std::string RandomName(std::mt19937& rng) {
  static const std::vector<std::string> kNames = {
      "x", "data", "loader", "self", "app", "_", "__init__", "json",
      "Net", "class", "run2", "item"};
  return Pick(rng, kNames);
}

std::string RandomLabel(std::mt19937& rng) {
  static const std::vector<std::string> kLabels = {
      "json", "init", "handler body", "file", "a,b", "path", "x y", "item"};
  return Pick(rng, kLabels);
}

std::string RandomText(std::mt19937& rng) {
  static const std::string kChars = "ab \"'\\\n\t#{}";
  std::string out;
  const int len = static_cast<int>(rng() % 5);
  for (int i = 0; i < len; ++i) out += kChars[rng() % kChars.size()];
  return out;
}

}  // namespace

Fragment RandomExpression(std::mt19937& rng, int depth) {
  const int choice = static_cast<int>(rng() % (depth > 0 ? 6 : 4));
  switch (choice) {
    case 0:
      return build::Name(RandomName(rng));
    case 1:
      return build::Hole(RandomLabel(rng));
    case 2:
      return build::String(RandomText(rng));
    case 3:
      return build::Number(Pick(rng, std::vector<std::string>{
                                         "0", "42", "3.5", "1e3", "007"}));
    case 4: {
      Fragment value = RandomExpression(rng, depth - 1);
      if (value.kind == sketch::NodeKind::kHole ||
          value.kind == sketch::NodeKind::kNumberLit) {
        value = build::Name(RandomName(rng));
      }
      return build::Attribute(std::move(value), RandomName(rng));
    }
    default: {
      Fragment func = Coin(rng, 80) ? build::Name(RandomName(rng))
                                    : build::Hole(RandomLabel(rng));
      std::vector<Fragment> args;
      const int n = static_cast<int>(rng() % 4);
      for (int i = 0; i < n; ++i) {
        args.push_back(build::Arg(RandomExpression(rng, depth - 1),
                                  Coin(rng, 30) ? RandomName(rng) : ""));
      }
      return build::Call(std::move(func), std::move(args));
    }
  }
}

Fragment RandomStatement(std::mt19937& rng, int depth) {
  const int choice = static_cast<int>(rng() % (depth > 0 ? 9 : 7));
  switch (choice) {
    case 0: {
      Fragment target = Coin(rng, 70) ? build::Name(RandomName(rng))
                                      : build::Hole(RandomLabel(rng));
      return build::Assign(std::move(target), RandomExpression(rng, depth));
    }
    case 1: {
      Fragment e = RandomExpression(rng, depth);
      if (e.kind == sketch::NodeKind::kHole) e = build::Name(RandomName(rng));
      return build::ExprStmt(std::move(e));
    }
    case 2:
      return Coin(rng, 50) ? build::Return(RandomExpression(rng, depth))
                           : build::Return();
    case 3:
      return build::Import(Pick(rng, std::vector<std::string>{
                                         "json", "torch.utils.data", "os"}),
                           Coin(rng, 50) ? RandomName(rng) : "");
    case 4:
      return build::Pass();
    case 5:
    case 6:
      return build::Hole(RandomLabel(rng));
    case 7: {
      std::vector<std::string> params;
      const int n = static_cast<int>(rng() % 3);
      for (int i = 0; i < n; ++i) params.push_back(RandomName(rng));
      std::vector<Fragment> body;
      const int m = static_cast<int>(rng() % 3);
      for (int i = 0; i < m; ++i) body.push_back(RandomStatement(rng, depth - 1));
      std::optional<Fragment> deco;
      if (Coin(rng, 20)) {
        deco = build::Decorator(build::Call(
            build::Attribute(build::Name("app"), "route"),
            {build::Arg(build::Hole(RandomLabel(rng)))}));
      }
      return build::FunctionDef(RandomName(rng), params, std::move(body),
                                std::move(deco));
    }
    default: {
      std::vector<Fragment> body;
      const int m = static_cast<int>(rng() % 3);
      for (int i = 0; i < m; ++i) body.push_back(RandomStatement(rng, depth - 1));
      return build::ClassDef(RandomName(rng), Coin(rng, 50) ? "Dataset" : "",
                             std::move(body));
    }
  }
}

sketch::Sketch RandomSketch(std::mt19937& rng, int attempts) {
  sketch::Sketch s;
  for (int i = 0; i < attempts; ++i) {
    // Container slots that accept statements or arguments.
    std::vector<std::pair<sketch::NodeId, std::string>> targets;
    for (const auto& [id, node] : s.nodes()) {
      if (s.TopOf(id) != s.root()) continue;
      if (node.kind == sketch::NodeKind::kModule) targets.emplace_back(id, "body");
      if (node.kind == sketch::NodeKind::kBody) targets.emplace_back(id, "stmts");
      if (node.kind == sketch::NodeKind::kArgList) targets.emplace_back(id, "items");
    }
    const auto& [parent, slot] = Pick(rng, targets);
    Fragment f = slot == "items"
                     ? build::Arg(RandomExpression(rng, 1),
                                  Coin(rng, 30) ? RandomName(rng) : "")
                     : RandomStatement(rng, 2);
    const sketch::NodeId child = s.Instantiate(f);
    const std::size_t size = s.node(parent).slot(slot).size();
    if (s.Attach(parent, slot, child, rng() % (size + 1))) s.Erase(child);
  }
  return s;
}

}  // namespace langsketch::testing

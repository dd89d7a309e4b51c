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

#include "support/scale_fixture.h"

#include <array>
#include <random>

#include "langsketch/catalog/catalog.h"

namespace langsketch::testing {

namespace {

constexpr std::array<const char*, 24> kWords = {
    "dataset", "loader", "function", "class", "app", "file", "route",
    "model", "config", "path", "data", "list", "server", "request",
    "handler", "json", "cache", "table", "user", "token", "image",
    "batch", "queue", "parser"};

std::string Word(std::mt19937_64& rng) {
  return kWords[std::uniform_int_distribution<std::size_t>(
      0, kWords.size() - 1)(rng)];
}

}  // namespace

nlohmann::json LargeCatalog(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  nlohmann::json doc = catalog::SerializeCatalog(catalog::StarterCatalog());
  auto& snippets = doc["snippets"];
  for (std::size_t i = snippets.size(); i < size; ++i) {
    const std::string a = Word(rng);
    const std::string b = Word(rng);
    const std::string ident = a + "_" + b + "_" + std::to_string(i);
    nlohmann::json s;
    s["name"] = "gen-" + std::to_string(i);
    s["aliases"] = {a + " " + b, b + " " + a + " " + Word(rng)};
    switch (i % 4) {
      case 0:
        s["kind"] = "function";
        s["template"] = "def " + ident + "():\n    ${1:body}\n";
        break;
      case 1:
        s["kind"] = "statement";
        s["template"] = ident + "(${1:arg})\n";
        break;
      case 2:
        s["kind"] = "expression";
        s["template"] = ident + "(${1:arg})";
        break;
      default:
        s["kind"] = "variable";
        s["template"] = ident + " = ${1:value}\n";
    }
    s["description"] = "generated";
    snippets.push_back(std::move(s));
  }
  return doc;
}

std::string LargeCodeBuffer(std::size_t lines, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string out;
  std::size_t n = 0;
  std::size_t id = 0;
  while (n < lines) {
    const std::string name = Word(rng) + "_" + std::to_string(id++);
    const std::size_t left = lines - n;
    if (left >= 3 && id % 3 == 0) {
      out += "def " + name + "(x):\n    y = x\n    return y\n";
      n += 3;
    } else if (left >= 2 && id % 3 == 1) {
      out += "class C" + name + ":\n    pass\n";
      n += 2;
    } else {
      out += name + " = " + std::to_string(id) + "\n";
      n += 1;
    }
  }
  return out;
}

}  // namespace langsketch::testing

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

#include "support/script_gen.h"

#include <array>

namespace langsketch::testing {

namespace {

constexpr std::array<const char*, 10> kVerbs = {
    "Define", "Create", "Build", "Write", "Make",
    "reads", "loads", "returns", "saves", "listen"};
constexpr std::array<const char*, 4> kDets = {"a", "the", "an", "my"};
constexpr std::array<const char*, 8> kMods = {
    "PyTorch", "Flask", "JSON", "helper", "new", "loader", "simple", "GET"};
constexpr std::array<const char*, 14> kNouns = {
    "dataset", "function", "class", "app", "file", "route", "model",
    "config", "path", "data", "list", "server", "request", "handler"};
constexpr std::array<const char*, 7> kPreps = {
    "with", "from", "to", "into", "containing", "for", "in"};

template <std::size_t N>
const char* Pick(std::mt19937_64& rng, const std::array<const char*, N>& a) {
  return a[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

bool Coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

void NounPhrase(std::mt19937_64& rng, std::vector<std::string>& out) {
  out.push_back(Pick(rng, kDets));
  if (Coin(rng, 0.5)) out.push_back(Pick(rng, kMods));
  out.push_back(Pick(rng, kNouns));
}

std::string LowerVerb(std::mt19937_64& rng) {
  // Third-person forms only after the first word.
  constexpr std::array<const char*, 7> kLater = {
      "reads", "loads", "returns", "saves", "listen", "parses", "opens"};
  return Pick(rng, kLater);
}

}  // namespace

std::vector<std::string> RandomPromptWords(std::mt19937_64& rng,
                                           std::size_t max_words) {
  std::vector<std::string> w;
  w.push_back(Pick(rng, kVerbs));
  if (w[0][0] >= 'a') w[0][0] = static_cast<char>(w[0][0] - 'a' + 'A');
  NounPhrase(rng, w);
  while (w.size() < max_words && Coin(rng, 0.75)) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0:
      case 1:
        w.push_back(Pick(rng, kPreps));
        NounPhrase(rng, w);
        break;
      case 2:
        w.push_back("that");
        w.push_back(LowerVerb(rng));
        if (Coin(rng, 0.7)) NounPhrase(rng, w);
        break;
      default:
        w.push_back("and");
        w.push_back(LowerVerb(rng));
        NounPhrase(rng, w);
    }
  }
  if (w.size() + 3 < max_words && Coin(rng, 0.3)) {
    w.back() += ".";
    w.push_back("It");
    w.push_back(LowerVerb(rng));
    if (Coin(rng, 0.6)) NounPhrase(rng, w);
  }
  if (w.size() > max_words) w.resize(max_words);
  return w;
}

std::vector<session::ScriptRecord> GenerateScript(
    std::mt19937_64& rng, const session::SessionConfig& config,
    const ScriptGenOptions& options,
    const std::function<void(const session::Session&,
                             const session::ScriptRecord&)>& after_step) {
  using session::ScriptRecord;
  session::Session s(session::NewSessionId(), config, "");
  std::vector<ScriptRecord> records;
  auto step = [&](ScriptRecord r) {
    if (r.type == ScriptRecord::Type::kTypeText) {
      s.UpdatePrompt(r.text, r.cursor);
    } else {
      s.AcceptIndex(r.suggestion_index);
    }
    records.push_back(r);
    if (after_step) after_step(s, records.back());
  };
  auto type = [&](std::string text) {
    const std::size_t cursor = text.size();
    step({ScriptRecord::Type::kTypeText, std::move(text), cursor, 0});
  };
  // Returns true when it accepted.
  auto maybe_accept = [&] {
    const auto& sugs = s.suggestions();
    if (sugs.empty() || !Coin(rng, options.accept_rate)) return false;
    std::size_t index = 0;
    if (Coin(rng, 0.4)) {
      index = std::uniform_int_distribution<std::size_t>(0, sugs.size() - 1)(rng);
    }
    step({ScriptRecord::Type::kAccept, "", 0, index});
    if (!s.prompt().empty() && Coin(rng, options.delete_rate)) {
      // Cut one word out of the prompt.
      std::vector<std::pair<std::size_t, std::size_t>> words;
      const std::string& p = s.prompt();
      for (std::size_t i = 0; i < p.size();) {
        while (i < p.size() && p[i] == ' ') ++i;
        std::size_t j = i;
        while (j < p.size() && p[j] != ' ') ++j;
        if (j > i) words.emplace_back(i, j);
        i = j;
      }
      auto [a, b] = words[std::uniform_int_distribution<std::size_t>(
          0, words.size() - 1)(rng)];
      if (b < p.size()) ++b;
      type(p.substr(0, a) + p.substr(b));
    }
    return true;
  };

  for (const std::string& word : RandomPromptWords(rng, options.max_words)) {
    std::string base = s.prompt();
    if (!base.empty() && base.back() != ' ') base += ' ';
    if (word.size() > 3 && Coin(rng, options.partial_rate)) {
      const std::size_t len = std::uniform_int_distribution<std::size_t>(
          2, word.size() - 1)(rng);
      type(base + word.substr(0, len));
      if (maybe_accept()) continue;
    }
    type(base + word);
    maybe_accept();
  }
  return records;
}

}  // namespace langsketch::testing
